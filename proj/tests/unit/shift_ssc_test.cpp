#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

#include "berge/constructions/sampling.hpp"
#include "berge/constructive/shift.hpp"
#include "berge/constructive/ssc.hpp"
#include "berge/core/error.hpp"
#include "berge/oracle/berge_cycle.hpp"
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

VertexSet cycle_vertices(const BergeCycle& c) { return VertexSet::from_vector(c.vertices); }

TEST(ShiftMap, Examples) {
  EXPECT_EQ(shift_map(2, 3, 10), 5);
  EXPECT_EQ(shift_map(8, 3, 10), 2);
  EXPECT_EQ(shift_map(0, 3, 10), 3);
  EXPECT_EQ(shift_map(9, 3, 10), 3);
  EXPECT_EQ(code_of([] { shift_map(10, 3, 10); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { shift_map(1, -1, 10); }), Errc::OutOfRange);
}

TEST(ShiftSet, Examples) {
  EXPECT_EQ(shift_set(VertexSet{0, 2}, 0, 10), (VertexSet{0, 2}));
  EXPECT_EQ(shift_set(VertexSet{0}, 3, 10), VertexSet{3});
  VertexSet a{0, 4, 8, 12, 16, 1, 5, 9, 13, 17};
  EXPECT_FALSE(shift_set(a, 6, 20).intersects(a));
}

TEST(ShiftImage, SizeLossOnlyAtTheWrap) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = uniform_int(rng, 2, 30);
    VertexSet a = VertexSet::from_bits(rng() & VertexSet::universe(n).bits());
    int s = uniform_int(rng, 1, n - 1);
    VertexSet img = shift_image(a, s, n);
    bool wrap = a.contains(0) && a.contains(n - 1);
    EXPECT_GE(img.size(), a.size() - 1);
    EXPECT_EQ(img.size() == a.size() - 1, wrap) << "n=" << n << " s=" << s << " A=" << a;
  }
}

TEST(ShiftLemma, CaseOneOmitsTheGap) {
  // n = 10, extra edge f = {0, 2, 6}; s = 3, j = 2: shift_map(2) = 5 must lie in e_0.
  const int n = 10;
  std::vector<VertexSet> cycle;
  for (int i = 0; i < n; ++i) cycle.push_back(VertexSet{i, (i + 1) % n, (i + 4) % n});
  cycle[0] = VertexSet{0, 1, 5};
  HamiltonianFrame f = testing::frame_from(n, 3, cycle, {VertexSet{0, 2, 6}});
  auto trig = find_shift_trigger(f, 3);
  ASSERT_TRUE(trig.has_value());
  EXPECT_EQ(trig->edge_id, n);
  EXPECT_EQ(trig->j, 2);
  BergeCycle c = shift_lemma_extract(f, 3, n, 2);
  EXPECT_TRUE(validate_berge_cycle(f.base(), c).ok());
  EXPECT_EQ(c.length(), n - 3 + 1);
  EXPECT_EQ(VertexSet::universe(n) - cycle_vertices(c), (VertexSet{3, 4}));
}

TEST(ShiftLemma, CollapsedForms) {
  const int n = 10;
  std::vector<VertexSet> cycle;
  for (int i = 0; i < n; ++i) cycle.push_back(VertexSet{i, (i + 1) % n, (i + 4) % n});
  cycle[0] = VertexSet{0, 1, 4};
  // j = 0: shift_map(0, 4) = 4 in e_0; cycle v0 e0 v4 e4 ... v9 e9.
  HamiltonianFrame f = testing::frame_from(n, 3, cycle, {VertexSet{0, 6, 8}});
  BergeCycle c0 = shift_lemma_extract(f, 4, n, 0);
  EXPECT_TRUE(validate_berge_cycle(f.base(), c0).ok());
  EXPECT_EQ(c0.vertices, (std::vector<int>{0, 4, 5, 6, 7, 8, 9}));
  EXPECT_EQ(c0.edge_ids[0], f.cycle_edge(0));
  // j = n - s: shift_map(6, 4) = 1 in e_0; cycle v0 e0 v1 ... v6 f v0.
  BergeCycle c1 = shift_lemma_extract(f, 4, n, 6);
  EXPECT_TRUE(validate_berge_cycle(f.base(), c1).ok());
  EXPECT_EQ(c1.vertices, (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(c1.edge_ids.back(), n);
}

TEST(ShiftLemma, Preconditions) {
  const int n = 8;
  std::vector<VertexSet> cycle;
  for (int i = 0; i < n; ++i) cycle.push_back(VertexSet{i, (i + 1) % n, (i + 3) % n});
  HamiltonianFrame f = testing::frame_from(n, 3, cycle, {VertexSet{0, 2, 5}, VertexSet{1, 2, 5}});
  EXPECT_EQ(code_of([&] { shift_lemma_extract(f, 0, n, 2); }), Errc::PreconditionViolated);
  EXPECT_EQ(code_of([&] { shift_lemma_extract(f, n - 1, n, 2); }), Errc::PreconditionViolated);
  EXPECT_EQ(code_of([&] { shift_lemma_extract(f, 2, 0, 1); }), Errc::PreconditionViolated);
  EXPECT_EQ(code_of([&] { shift_lemma_extract(f, 2, n + 1, 1); }), Errc::PreconditionViolated);
  EXPECT_EQ(code_of([&] { shift_lemma_extract(f, 2, n, 3); }), Errc::PreconditionViolated);
  // shift_map(2, 1) = 3 lies in e_0 = {0, 1, 3}, shift_map(5, 1) = 6 does not.
  EXPECT_NO_THROW(shift_lemma_extract(f, 1, n, 2));
  EXPECT_EQ(code_of([&] { shift_lemma_extract(f, 1, n, 5); }), Errc::PreconditionViolated);
}

TEST(ShiftLemma, RandomTriggersGiveValidCycles) {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = uniform_int(rng, 7, 20);
    int r = uniform_int(rng, 3, n - 3);
    HamiltonianFrame f = random_anchored_frame(rng, n, r, 0, uniform_int(rng, 1, 4), uniform_int(rng, 0, 1) == 1);
    for (int s = 1; s <= n - 2; ++s) {
      auto t = find_shift_trigger(f, s);
      if (!t) continue;
      ++checked;
      EXPECT_TRUE(f.base().edge(t->edge_id).contains(t->j));
      EXPECT_TRUE(f.base().edge(f.cycle_edge(0)).contains(shift_map(t->j, s, n)));
      BergeCycle c = shift_lemma_extract(f, s, t->edge_id, t->j);
      EXPECT_EQ(c.length(), n - s + 1);
      EXPECT_TRUE(validate_berge_cycle(f.base(), c).ok());
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Ssc, IsKSscExamples) {
  VertexSet a{0, 4, 8, 12, 16, 1, 5, 9, 13, 17};
  EXPECT_TRUE(is_k_ssc(a, 6, 20));
  EXPECT_TRUE(is_k_ssc(VertexSet{0}, 1, 2));
  EXPECT_FALSE(is_k_ssc(VertexSet{0, 1, 2}, 2, 6));
  EXPECT_FALSE(is_k_ssc(VertexSet{0, 3}, 1, 6));
}

TEST(Ssc, DecomposeExamples) {
  VertexSet a{0, 4, 8, 12, 16, 1, 5, 9, 13, 17};
  SscDecomposition d = ssc_decompose(a, 6, 20);
  EXPECT_EQ(d.d, 2);
  ASSERT_EQ(d.blocks.size(), 2U);
  EXPECT_EQ(d.blocks[0], cyclic_subgroup(4, 20));
  EXPECT_EQ(d.blocks[1], rotate(cyclic_subgroup(4, 20), 1, 20));

  SscDecomposition small = ssc_decompose(VertexSet{0, 1}, 2, 4);
  EXPECT_EQ(small.d, 2);
  EXPECT_EQ(small.blocks, (std::vector<VertexSet>{VertexSet{0}, VertexSet{1}}));

  SscDecomposition three = ssc_decompose(VertexSet{0, 1, 2}, 3, 6);
  EXPECT_EQ(three.d, 3);
  EXPECT_EQ(three.blocks, (std::vector<VertexSet>{VertexSet{0}, VertexSet{1}, VertexSet{2}}));
}

TEST(Ssc, DecomposeErrors) {
  EXPECT_EQ(code_of([] { ssc_decompose(VertexSet{0, 1, 2}, 2, 6); }), Errc::NotSsc);
  EXPECT_EQ(code_of([] { ssc_decompose(VertexSet{1, 2, 3}, 3, 6); }), Errc::NotSsc);
  EXPECT_EQ(code_of([] { ssc_decompose(VertexSet{0}, 0, 2); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { ssc_decompose(VertexSet{0}, 1, 0); }), Errc::OutOfRange);
}

TEST(Ssc, RotatedDecomposition) {
  VertexSet a = rotate(VertexSet{0, 1, 2}, 2, 6);  // {2, 3, 4}
  SscDecomposition d = ssc_decompose_rotated(a, 3, 6);
  EXPECT_EQ(d.a, a);
  VertexSet uni;
  for (VertexSet b : d.blocks) uni |= b;
  EXPECT_EQ(uni, a);
}

TEST(Ssc, CyclicSubgroup) {
  EXPECT_EQ(cyclic_subgroup(4, 20), (VertexSet{0, 4, 8, 12, 16}));
  EXPECT_EQ(cyclic_subgroup(6, 20), cyclic_subgroup(2, 20));
  EXPECT_EQ(cyclic_subgroup(0, 5), VertexSet{0});
}

// Exhaustive check for small even n; the acceptance suite covers n <= 20.
TEST(Ssc, BruteForceStructureUpToTwelve) {
  for (int n = 2; n <= 12; n += 2) {
    for (int k = 1; k < n; ++k) {
      const int d = std::gcd(n, k);
      std::vector<VertexSet> all = testing::enumerate_k_ssc(n, k);
      EXPECT_EQ(all.empty(), (n / d) % 2 != 0) << "n=" << n << " k=" << k;
      for (VertexSet a : all) {
        SscDecomposition dec = ssc_decompose(a, k, n);
        EXPECT_EQ(dec.d, d);
        EXPECT_FALSE(rotate(a, d, n).intersects(a));
        VertexSet uni;
        for (int j = 0; j < d; ++j) {
          VertexSet expect = rotate(cyclic_subgroup(2 * d, n), a.contains(j) ? j : j + d, n);
          EXPECT_EQ(dec.blocks[j], expect);
          EXPECT_FALSE(uni.intersects(dec.blocks[j]));
          uni |= dec.blocks[j];
        }
        EXPECT_EQ(uni, a);
      }
    }
  }
}

}  // namespace
}  // namespace berge
