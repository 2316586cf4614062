#include "berge/core/matching.hpp"

namespace berge {

IncrementalMatcher::IncrementalMatcher(int right_count)
    : match_right_(right_count, -1), seen_(right_count, 0) {}

bool IncrementalMatcher::augment(int left, int stamp) {
  for (int right : cand_[left]) {
    if (seen_[right] == stamp) continue;
    seen_[right] = stamp;
    if (match_right_[right] < 0 || augment(match_right_[right], stamp)) {
      match_right_[right] = left;
      match_left_[left] = right;
      return true;
    }
  }
  return false;
}

bool IncrementalMatcher::push(std::span<const int> candidates) {
  const int left = size();
  cand_.push_back(candidates);
  match_left_.push_back(-1);
  if (augment(left, ++stamp_)) return true;
  cand_.pop_back();
  match_left_.pop_back();
  return false;
}

void IncrementalMatcher::pop() {
  const int left = size() - 1;
  match_right_[match_left_[left]] = -1;
  match_left_.pop_back();
  cand_.pop_back();
}

std::vector<int> maximum_matching(const std::vector<std::vector<int>>& candidates, int right_count) {
  // Kuhn: a left vertex that fails to augment never becomes matchable later,
  // so unmatched vertices are simply skipped.
  IncrementalMatcher matcher(right_count);
  std::vector<int> result(candidates.size(), -1);
  std::vector<int> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (matcher.push(candidates[i])) {
      order.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t j = 0; j < order.size(); ++j) result[order[j]] = matcher.matched(static_cast<int>(j));
  return result;
}

}  // namespace berge
