#include "berge/oracle/graph_cycles.hpp"

#include <string>

#include "berge/core/error.hpp"

namespace berge {

namespace {

class GraphCycleSearch {
 public:
  GraphCycleSearch(const SimpleGraph& g, int length) : g_(g), length_(length) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s + length_ <= g_.n(); ++s) {
      start_ = s;
      allowed_ = VertexSet::interval(s + 1, g_.n());
      path_.assign(1, s);
      used_ = VertexSet{s};
      if (extend()) return path_;
    }
    return std::nullopt;
  }

 private:
  bool can_close(int need) const {
    const VertexSet avail = allowed_ - used_;
    if (avail.size() < need) return false;
    const VertexSet closers = g_.neighbors(start_) & (avail - VertexSet::interval(0, path_[1] + 1));
    if (closers.empty()) return false;
    VertexSet seen;
    VertexSet frontier{path_.back()};
    int dist = 0;
    bool closer_in_range = false;
    while (!frontier.empty()) {
      ++dist;
      VertexSet next;
      for (int v : frontier) next |= g_.neighbors(v);
      next = next & (avail - seen);
      seen |= next;
      if (dist <= need && next.intersects(closers)) closer_in_range = true;
      if (closer_in_range && seen.size() >= need) return true;
      frontier = next;
    }
    return false;
  }

  bool extend() {
    const int depth = static_cast<int>(path_.size());
    const int cur = path_.back();
    if (depth == length_) return path_[1] < cur && g_.adjacent(cur, start_);
    if (depth >= 2 && !can_close(length_ - depth)) return false;
    for (int w : g_.neighbors(cur) & (allowed_ - used_)) {
      path_.push_back(w);
      used_.insert(w);
      if (extend()) return true;
      used_.erase(w);
      path_.pop_back();
    }
    return false;
  }

  const SimpleGraph& g_;
  int length_;
  int start_ = 0;
  VertexSet allowed_;
  VertexSet used_;
  std::vector<int> path_;
};

}  // namespace

std::optional<std::vector<int>> graph_cycle_of_length(const SimpleGraph& g, int length) {
  if (length < 3 || length > g.n()) {
    throw Error(Errc::LengthOutOfRange,
                "cycle length " + std::to_string(length) + " outside 3.." + std::to_string(g.n()));
  }
  return GraphCycleSearch(g, length).run();
}

bool is_graph_cycle(const SimpleGraph& g, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) return false;
  VertexSet seen;
  for (int v : cycle) {
    if (v < 0 || v >= g.n() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < len; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) return false;
  }
  return true;
}

}  // namespace berge
