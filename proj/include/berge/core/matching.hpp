#pragma once

#include <span>
#include <vector>

namespace berge {

/**
 * Maximum bipartite matching by augmenting paths (Kuhn), left vertices added
 * one at a time. Candidate lists are scanned in the order given, so callers
 * get smallest-index tie-breaking by passing ascending lists.
 *
 * push() either extends the matching by one or leaves it untouched, which lets
 * a backtracking search use it as an incremental Hall-condition check.
 */
class IncrementalMatcher {
 public:
  explicit IncrementalMatcher(int right_count);

  /// Adds a left vertex; returns false (state unchanged) if no augmenting path exists.
  /// The candidate storage must outlive the pushed vertex.
  bool push(std::span<const int> candidates);
  /// Removes the most recently pushed left vertex.
  void pop();

  int size() const { return static_cast<int>(match_left_.size()); }
  /// Right vertex matched to left vertex i.
  int matched(int i) const { return match_left_[i]; }
  std::vector<int> assignment() const { return match_left_; }

 private:
  bool augment(int left, int stamp);

  std::vector<std::span<const int>> cand_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

/// One-shot maximum matching. Returns right vertex per left vertex, -1 if unmatched.
std::vector<int> maximum_matching(const std::vector<std::vector<int>>& candidates, int right_count);

}  // namespace berge
