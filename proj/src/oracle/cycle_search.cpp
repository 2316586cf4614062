#include "berge/oracle/cycle_search.hpp"

#include <algorithm>
#include <string>

#include "berge/core/error.hpp"
#include "berge/core/matching.hpp"

namespace berge {

namespace {

struct CapReached {};

class BergeSearch {
 public:
  BergeSearch(const Hypergraph& h, int length, const SearchOptions& options)
      : h_(h), length_(length), options_(options), matcher_(h.edge_count()) {
    adj_.assign(h.n(), {});
    for (int u = 0; u < h.n(); ++u) {
      for (int v = 0; v < h.n(); ++v) {
        if (u != v && !h.covering(u, v).empty()) adj_[u].insert(v);
      }
    }
    interval_ = std::max(1, options.prune_interval);
  }

  SearchResult run(int only_start) {
    SearchResult result;
    try {
      const int last_start = only_start >= 0 ? only_start : h_.n() - length_;
      for (int s = std::max(0, only_start); s <= last_start; ++s) {
        start_ = s;
        allowed_ = VertexSet::interval(s + 1, h_.n());
        path_.assign(1, s);
        used_ = VertexSet{s};
        if (extend()) {
          result.status = SearchStatus::Found;
          result.cycle = witness();
          break;
        }
      }
      if (!result.cycle) result.status = SearchStatus::Absent;
    } catch (const CapReached&) {
      result.status = SearchStatus::Unknown;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  std::span<const int> pair_edges(int i) const {
    const int a = path_[i];
    const int b = path_[(i + 1) % path_.size()];
    return h_.covering(a, b);
  }

  // Pushes consecutive pairs [matcher size, upto) into the matcher. On
  // failure rolls back this batch and returns false.
  bool flush(int upto, int& pushed) {
    pushed = 0;
    while (matcher_.size() < upto) {
      if (!matcher_.push(pair_edges(matcher_.size()))) {
        for (int i = 0; i < pushed; ++i) matcher_.pop();
        pushed = 0;
        return false;
      }
      ++pushed;
    }
    return true;
  }

  void unflush(int pushed) {
    for (int i = 0; i < pushed; ++i) matcher_.pop();
  }

  // Necessary condition for completing the path: `need` more fresh vertices,
  // the last of which is a neighbour of start_ beyond path_[1].
  bool can_close(int need) const {
    const VertexSet avail = allowed_ - used_;
    if (avail.size() < need) return false;
    const VertexSet closers = adj_[start_] & (avail - VertexSet::interval(0, path_[1] + 1));
    if (closers.empty()) return false;
    VertexSet seen;
    VertexSet frontier{path_.back()};
    int dist = 0;
    bool closer_in_range = false;
    while (!frontier.empty()) {
      ++dist;
      VertexSet next;
      for (int v : frontier) next |= adj_[v];
      next = next & (avail - seen);
      seen |= next;
      if (dist <= need && next.intersects(closers)) closer_in_range = true;
      if (closer_in_range && seen.size() >= need) return true;
      frontier = next;
    }
    return false;
  }

  bool extend() {
    if (options_.node_cap != 0 && nodes_ >= options_.node_cap) throw CapReached{};
    ++nodes_;
    const int depth = static_cast<int>(path_.size());
    const int cur = path_.back();
    if (depth == length_) {
      if (length_ >= 3 && path_[1] > path_.back()) return false;
      if (!adj_[cur].contains(start_)) return false;
      int pushed = 0;
      if (flush(length_, pushed)) return true;
      return false;
    }
    int pushed = 0;
    if (depth - 1 - matcher_.size() >= interval_) {
      if (!flush(depth - 1, pushed)) return false;
    }
    if (depth >= 2 && !can_close(length_ - depth)) {
      unflush(pushed);
      return false;
    }
    const VertexSet next = adj_[cur] & (allowed_ - used_);
    for (int w : next) {
      path_.push_back(w);
      used_.insert(w);
      const bool found = extend();
      if (found) return true;
      used_.erase(w);
      path_.pop_back();
      // Pairs past the shortened path were flushed deeper and rolled back there.
    }
    unflush(pushed);
    return false;
  }

  BergeCycle witness() const {
    BergeCycle c;
    c.vertices = path_;
    for (int i = 0; i < length_; ++i) c.edge_ids.push_back(matcher_.matched(i));
    return c;
  }

  const Hypergraph& h_;
  int length_;
  SearchOptions options_;
  int interval_ = 1;
  IncrementalMatcher matcher_;
  std::vector<VertexSet> adj_;
  std::vector<int> path_;
  VertexSet used_;
  VertexSet allowed_;
  int start_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult find_berge_cycle(const Hypergraph& h, int length, const SearchOptions& options) {
  if (length < 2 || length > h.n()) {
    throw Error(Errc::LengthOutOfRange,
                "cycle length " + std::to_string(length) + " outside 2.." + std::to_string(h.n()));
  }
  BergeSearch search(h, length, options);
  return search.run(length == h.n() ? 0 : -1);
}

}  // namespace berge
