#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "berge/constructions/constructions.hpp"
#include "berge/constructions/sampling.hpp"
#include "berge/core/error.hpp"
#include "berge/core/thresholds.hpp"
#include "berge/oracle/berge_cycle.hpp"
#include "berge/oracle/cycle_search.hpp"
#include "berge/oracle/frame.hpp"
#include "berge/oracle/graph_cycles.hpp"
#include "berge/oracle/spectrum.hpp"
#include "test_support.hpp"

namespace berge {
namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::InvariantViolated;
}

Hypergraph complete(int n, int r) {
  std::vector<std::vector<int>> edges;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    if (std::popcount(b) == r) edges.push_back(VertexSet::from_bits(b).to_vector());
  }
  return Hypergraph::make(n, r, edges);
}

SimpleGraph graph_of(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<std::vector<bool>> matrix_of(const SimpleGraph& g) {
  std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edge_list()) adj[u][v] = adj[v][u] = true;
  return adj;
}

TEST(Validate, AcceptsTightCycleWalk) {
  Hypergraph h = tight_cycle(6, 3);  // edge i = {i, i+1, i+2}
  BergeCycle c{{0, 1, 2}, {5, 1, 0}};
  EXPECT_TRUE(validate_berge_cycle(h, c).ok()) << validate_berge_cycle(h, c).violations.front();
}

TEST(Validate, ReportsViolations) {
  Hypergraph h = Hypergraph::make(4, 3, {{0, 1, 2}, {1, 2, 3}});
  CycleValidation same_edge = validate_berge_cycle(h, BergeCycle{{0, 1}, {0, 0}});
  EXPECT_FALSE(same_edge.ok());
  CycleValidation missing = validate_berge_cycle(h, BergeCycle{{0, 2}, {0, 1}});
  ASSERT_FALSE(missing.ok());
  bool mentions_pair = false;
  for (const auto& v : missing.violations) mentions_pair |= v.find("2") != std::string::npos;
  EXPECT_TRUE(mentions_pair);
  EXPECT_FALSE(validate_berge_cycle(h, BergeCycle{{0}, {0}}).ok());
  EXPECT_FALSE(validate_berge_cycle(h, BergeCycle{{0, 1}, {0}}).ok());
  EXPECT_FALSE(validate_berge_cycle(h, BergeCycle{{0, 9}, {0, 1}}).ok());
  EXPECT_FALSE(validate_berge_cycle(h, BergeCycle{{1, 1}, {0, 1}}).ok());
  EXPECT_FALSE(validate_berge_cycle(h, BergeCycle{{1, 2}, {0, 5}}).ok());
}

TEST(Witness, FormatParseRoundTrip) {
  BergeCycle c{{0, 4, 2}, {3, 1, 7}};
  EXPECT_EQ(format_witness(c), "0 3 4 1 2 7");
  EXPECT_EQ(parse_witness("0 3 4 1 2 7"), c);
  EXPECT_EQ(code_of([] { parse_witness("0 3 4"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse_witness("0 a"); }), Errc::ParseError);
}

TEST(FindBergeCycle, SpecExamples) {
  Hypergraph tight = tight_cycle(6, 3);
  SearchResult ham = find_berge_cycle(tight, 6);
  ASSERT_TRUE(ham.found());
  EXPECT_TRUE(validate_berge_cycle(tight, *ham.cycle).ok());
  EXPECT_EQ(ham.cycle->length(), 6);

  EXPECT_EQ(find_berge_cycle(regular_minus_edge(6, 3), 6).status, SearchStatus::Absent);

  Hypergraph pair = Hypergraph::make(4, 3, {{0, 1, 2}, {1, 2, 3}});
  SearchResult two = find_berge_cycle(pair, 2);
  ASSERT_TRUE(two.found());
  EXPECT_TRUE(validate_berge_cycle(pair, *two.cycle).ok());
  EXPECT_FALSE(find_berge_cycle(Hypergraph::make(4, 3, {{0, 1, 2}}), 2).found());
}

TEST(FindBergeCycle, LengthErrors) {
  Hypergraph h = tight_cycle(6, 3);
  EXPECT_EQ(code_of([&] { find_berge_cycle(h, 1); }), Errc::LengthOutOfRange);
  EXPECT_EQ(code_of([&] { find_berge_cycle(h, 7); }), Errc::LengthOutOfRange);
}

TEST(FindBergeCycle, NodeCapGivesUnknownNotAbsent) {
  Hypergraph h = clique_necklace(6, 3);
  SearchOptions capped;
  capped.node_cap = 3;
  SearchResult r = find_berge_cycle(h, 5, capped);
  EXPECT_EQ(r.status, SearchStatus::Unknown);
  EXPECT_FALSE(r.cycle.has_value());
  EXPECT_EQ(find_berge_cycle(h, 5).status, SearchStatus::Absent);
}

TEST(FindBergeCycle, PruneIntervalDoesNotChangeAnswers) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = uniform_int(rng, 4, 8);
    int r = uniform_int(rng, 2, 3);
    Hypergraph h = testing::random_hypergraph(rng, n, r, uniform_int(rng, 1, 10));
    for (int len = 2; len <= n; ++len) {
      SearchOptions lazy;
      lazy.prune_interval = 3;
      EXPECT_EQ(find_berge_cycle(h, len).status, find_berge_cycle(h, len, lazy).status);
    }
  }
}

// Completeness against brute force, plus the incidence-graph 2l-cycle correspondence.
TEST(FindBergeCycle, AgreesWithBruteForceUpToEightVertices) {
  std::mt19937_64 rng(2024);
  int disagreements = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int n = uniform_int(rng, 3, 8);
    int r = uniform_int(rng, 2, std::min(n, 4));
    int m = uniform_int(rng, 0, std::min<int>(12, static_cast<int>(binomial(n, r))));
    Hypergraph h = testing::random_hypergraph(rng, n, r, m);
    auto incidence = testing::incidence_matrix(h);
    for (int len = 2; len <= n; ++len) {
      SearchResult got = find_berge_cycle(h, len);
      if (got.found()) {
        EXPECT_TRUE(validate_berge_cycle(h, *got.cycle).ok());
        EXPECT_EQ(got.cycle->length(), len);
      }
      bool naive = testing::naive_has_berge_cycle(h, len);
      if (got.found() != naive) ++disagreements;
      if (2 * len <= static_cast<int>(incidence.size())) {
        EXPECT_EQ(got.found(), testing::naive_has_graph_cycle(incidence, 2 * len)) << "len " << len;
      } else {
        EXPECT_FALSE(got.found());
      }
    }
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(Frame, FromCycleInvariants) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    int n = uniform_int(rng, 5, 12);
    int r = uniform_int(rng, 2, n - 2);
    Hypergraph h = random_hamiltonian_hypergraph(rng, n, r, r + 1);
    auto frame = find_hamiltonian_frame(h);
    ASSERT_TRUE(frame.has_value());
    EXPECT_EQ(static_cast<int>(frame->extra_edges().size()), h.edge_count() - n);
    std::vector<bool> on_cycle(h.edge_count(), false);
    for (int i = 0; i < n; ++i) {
      VertexSet e = frame->base().edge(frame->cycle_edge(i));
      EXPECT_TRUE(e.contains(i) && e.contains((i + 1) % n));
      EXPECT_FALSE(on_cycle[frame->cycle_edge(i)]);
      on_cycle[frame->cycle_edge(i)] = true;
    }
    for (int i = 0; i < n; ++i) {
      VertexSet uni;
      int count = 0;
      for (int id : frame->extra_edges()) {
        if (frame->base().edge(id).contains(i)) {
          uni |= frame->base().edge(id);
          ++count;
        }
      }
      EXPECT_EQ(frame->extra_union_at(i), uni);
      EXPECT_EQ(frame->extra_degree(i), count);
    }
    // Input labels: the frame's cycle mapped back is a hamiltonian cycle of h.
    BergeCycle back = frame->to_input(frame->cycle());
    EXPECT_TRUE(validate_berge_cycle(h, back).ok());
    EXPECT_EQ(frame->input_vertex(0), 0);
  }
}

TEST(Frame, RotateReflectSwapKeepInvariants) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int n = uniform_int(rng, 5, 12);
    int r = uniform_int(rng, 3, n - 2);
    HamiltonianFrame f = random_frame(rng, n, r, uniform_int(rng, 1, 6));
    int t = uniform_int(rng, 0, n - 1);
    for (const HamiltonianFrame& g : {f.rotated(t), f.reflected(), f.rotated(t).reflected()}) {
      for (int i = 0; i < n; ++i) {
        VertexSet e = g.base().edge(g.cycle_edge(i));
        EXPECT_TRUE(e.contains(i) && e.contains((i + 1) % n));
        // Same underlying edge list up to renaming.
        EXPECT_EQ(g.base().edge(i).size(), r);
      }
      BergeCycle c = g.cycle();
      EXPECT_TRUE(validate_berge_cycle(f.base(), f.from_input(g.to_input(c))).ok());
    }
    HamiltonianFrame rot = f.rotated(t);
    EXPECT_EQ(rot.input_vertex(0), f.input_vertex(t));
    EXPECT_EQ(rot.cycle_edge(0), f.cycle_edge(t));
    HamiltonianFrame ref = f.reflected();
    EXPECT_EQ(ref.input_vertex(1), f.input_vertex(n - 1));
    EXPECT_EQ(ref.cycle_edge(0), f.cycle_edge(n - 1));
  }
}

TEST(Frame, SwapEdge) {
  // Cycle edges {i, i+1, i+2}; extra {0, 1, 4} covers the pair {0, 1}.
  std::vector<VertexSet> cycle;
  for (int i = 0; i < 6; ++i) cycle.push_back(VertexSet{i, (i + 1) % 6, (i + 2) % 6});
  HamiltonianFrame f = testing::frame_from(6, 3, cycle, {VertexSet{0, 1, 4}});
  HamiltonianFrame g = f.with_swapped_edge(0, 6);
  EXPECT_EQ(g.cycle_edge(0), 6);
  EXPECT_TRUE(g.is_extra(0));
  EXPECT_FALSE(g.is_extra(6));
  EXPECT_EQ(code_of([&] { f.with_swapped_edge(1, 6); }), Errc::PreconditionViolated);
  EXPECT_EQ(code_of([&] { f.with_swapped_edge(0, 2); }), Errc::PreconditionViolated);
}

TEST(Frame, FromCycleRejectsNonHamiltonian) {
  Hypergraph h = tight_cycle(6, 3);
  EXPECT_EQ(code_of([&] { HamiltonianFrame::from_cycle(h, BergeCycle{{0, 1, 2}, {5, 0, 1}}); }),
            Errc::PreconditionViolated);
}

TEST(FindHamiltonianFrame, SpecExamples) {
  EXPECT_TRUE(find_hamiltonian_frame(tight_cycle(6, 3)).has_value());
  EXPECT_FALSE(find_hamiltonian_frame(two_cliques(9, 4)).has_value());
  auto k6 = find_hamiltonian_frame(complete(6, 3));
  ASSERT_TRUE(k6.has_value());
  EXPECT_EQ(k6->extra_edges().size(), 20U - 6U);
}

TEST(Spectrum, SpecExamples) {
  SpectrumReport gap = spectrum(clique_necklace(6, 3), 2, 18);
  EXPECT_EQ(gap.absent(), (std::set<int>{5}));
  EXPECT_EQ(gap.present().size(), 16U);
  EXPECT_FALSE(gap.is_pancyclic());
  for (int len : gap.present()) {
    EXPECT_TRUE(validate_berge_cycle(clique_necklace(6, 3), *gap.entries.at(len).witness).ok());
  }

  SpectrumReport k5 = spectrum(complete(5, 3), 2, 5);
  EXPECT_TRUE(k5.is_pancyclic());

  SpectrumReport single = spectrum(Hypergraph::make(3, 3, {{0, 1, 2}}), 2, 3);
  EXPECT_TRUE(single.present().empty());
  EXPECT_EQ(single.absent(), (std::set<int>{2, 3}));

  EXPECT_EQ(code_of([] { spectrum(tight_cycle(6, 3), 3, 2); }), Errc::LengthOutOfRange);
  EXPECT_EQ(code_of([] { spectrum(tight_cycle(6, 3), 1, 6); }), Errc::LengthOutOfRange);
}

TEST(Spectrum, FormatLines) {
  SpectrumReport rep = spectrum(regular_minus_edge(6, 3), 5, 6);
  std::string text = format_spectrum(rep);
  EXPECT_NE(text.find("5 PRESENT "), std::string::npos);
  EXPECT_NE(text.find("6 ABSENT\n"), std::string::npos);

  SearchOptions capped;
  capped.node_cap = 1;
  SpectrumReport unk = spectrum(clique_necklace(6, 3), 5, 5, capped);
  EXPECT_EQ(unk.unknown(), (std::set<int>{5}));
  EXPECT_TRUE(unk.absent().empty());
  EXPECT_EQ(format_spectrum(unk), "5 UNKNOWN\n");
}

TEST(GraphCycles, SpecExamples) {
  SimpleGraph k4 = graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto tri = graph_cycle_of_length(k4, 3);
  ASSERT_TRUE(tri.has_value());
  EXPECT_TRUE(is_graph_cycle(k4, *tri));

  SimpleGraph c5 = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_FALSE(graph_cycle_of_length(c5, 4).has_value());
  EXPECT_TRUE(graph_cycle_of_length(c5, 5).has_value());

  SimpleGraph k33(6);
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  }
  EXPECT_FALSE(graph_cycle_of_length(k33, 5).has_value());
  EXPECT_TRUE(graph_cycle_of_length(k33, 6).has_value());

  EXPECT_EQ(code_of([&] { graph_cycle_of_length(k4, 2); }), Errc::LengthOutOfRange);
  EXPECT_EQ(code_of([&] { graph_cycle_of_length(k4, 5); }), Errc::LengthOutOfRange);
  EXPECT_FALSE(is_graph_cycle(k4, {0, 1}));
  EXPECT_FALSE(is_graph_cycle(c5, {0, 1, 3}));
}

TEST(GraphCycles, AgreesWithBruteForce) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n = uniform_int(rng, 3, 9);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (uniform_int(rng, 0, 2) == 0) g.add_edge(u, v);
      }
    }
    auto adj = matrix_of(g);
    for (int len = 3; len <= n; ++len) {
      auto c = graph_cycle_of_length(g, len);
      EXPECT_EQ(c.has_value(), testing::naive_has_graph_cycle(adj, len));
      if (c) {
        EXPECT_EQ(static_cast<int>(c->size()), len);
        EXPECT_TRUE(is_graph_cycle(g, *c));
      }
    }
  }
}

}  // namespace
}  // namespace berge
