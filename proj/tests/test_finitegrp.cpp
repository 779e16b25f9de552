#include "hyperc/generate.hpp"

#include <gtest/gtest.h>

using namespace hyperc;

namespace {

// brute-force center straight from the table
std::vector<int> naive_center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int a = 0; a < g.order(); ++a) {
    bool c = true;
    for (int b = 0; b < g.order() && c; ++b) c = g.mul(a, b) == g.mul(b, a);
    if (c) out.push_back(a);
  }
  return out;
}

// the upper central series via "x in Z_{i+1} iff [x, g] in Z_i for all g"
std::vector<std::size_t> naive_ucs_orders(const FiniteGroup& g) {
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  std::vector<std::size_t> orders{1};
  while (true) {
    std::vector<bool> next(g.order(), false);
    std::size_t n = 0;
    for (int x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (int y = 0; y < g.order() && ok; ++y) ok = in[g.commutator(x, y)];
      next[x] = ok;
      n += ok;
    }
    if (n == orders.back()) return orders;
    orders.push_back(n);
    in = next;
  }
}

std::vector<std::size_t> orders(const std::vector<FiniteSubgroup>& s) {
  std::vector<std::size_t> out;
  for (const auto& h : s) out.push_back(h.size());
  return out;
}

}  // namespace

TEST(FiniteGroup, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}), InvalidGroup);  // not Latin
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), InvalidGroup);
  // a loop of order 5 with an involution cannot be associative
  EXPECT_THROW(FiniteGroup({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
               InvalidGroup);
  EXPECT_THROW(FiniteGroup(std::vector<std::vector<int>>{}), InvalidGroup);
}

TEST(FiniteGroup, CapIsEnforced) {
  EXPECT_THROW(FiniteGroup::direct_product(FiniteGroup::cyclic(50), FiniteGroup::cyclic(50)), CapExceeded);
  EXPECT_THROW(FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}, 100), CapExceeded);
}

TEST(FiniteGroup, PermutationGroupOrders) {
  EXPECT_EQ(FiniteGroup::symmetric(4).order(), 24);
  EXPECT_EQ(FiniteGroup::from_permutations({{1, 2, 0, 3}, {0, 2, 3, 1}}).order(), 12);  // A4
  EXPECT_EQ(FiniteGroup::dihedral(5).order(), 10);
  EXPECT_TRUE(FiniteGroup::cyclic(9).is_abelian());
  EXPECT_FALSE(FiniteGroup::dihedral(3).is_abelian());
}

TEST(FiniteGroup, CenterMatchesNaive) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    auto g = gen::random_finite_group(rng, 64);
    EXPECT_EQ(center(g).elements, naive_center(g)) << "order " << g.order();
  }
}

TEST(FiniteGroup, KnownCenters) {
  EXPECT_EQ(center(FiniteGroup::dihedral(4)).size(), 2u);
  EXPECT_EQ(center(FiniteGroup::dihedral(5)).size(), 1u);
  EXPECT_EQ(center(FiniteGroup::symmetric(4)).size(), 1u);
  EXPECT_EQ(center(gen::quaternion8()).size(), 2u);
}

TEST(FiniteGroup, UpperCentralSeriesMatchesNaive) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    auto g = gen::random_finite_group(rng, 64);
    EXPECT_EQ(orders(ucs(g)), naive_ucs_orders(g)) << "order " << g.order();
  }
}

TEST(FiniteGroup, NilpotencyClassOfTwoGroups) {
  // D_{2^n} of order 2^(n+1) has class n; Q8 has class 2
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(nilpotency_class(FiniteGroup::dihedral(1 << n)), n == 1 ? 1 : n);
  EXPECT_EQ(nilpotency_class(gen::quaternion8()), 2);
  EXPECT_FALSE(nilpotency_class(FiniteGroup::symmetric(3)));
  EXPECT_EQ(nilpotency_class(FiniteGroup::cyclic(1)), 0);
}

TEST(FiniteGroup, NormalSubgroupCounts) {
  EXPECT_EQ(normal_subgroups(FiniteGroup::symmetric(4)).size(), 4u);
  EXPECT_EQ(normal_subgroups(FiniteGroup::dihedral(4)).size(), 6u);
  EXPECT_EQ(normal_subgroups(gen::quaternion8()).size(), 6u);
  EXPECT_EQ(normal_subgroups(FiniteGroup::cyclic(12)).size(), 6u);  // divisors of 12
  EXPECT_EQ(normal_subgroups(FiniteGroup::from_permutations({{1, 2, 0, 3}, {0, 2, 3, 1}})).size(), 3u);
}

TEST(FiniteGroup, NormalSubgroupsAreExactlyTheNormalOnes) {
  // every subgroup generated by at most two elements that is normal must be listed
  std::mt19937_64 rng(13);
  for (int i = 0; i < 12; ++i) {
    auto g = gen::random_finite_group(rng, 32);
    auto ns = normal_subgroups(g);
    for (const auto& n : ns) EXPECT_TRUE(is_normal(g, n));
    for (int a = 0; a < g.order(); ++a)
      for (int b = a; b < g.order(); ++b) {
        auto h = generated(g, {a, b});
        if (is_normal(g, h)) {
          EXPECT_NE(std::find(ns.begin(), ns.end(), h), ns.end());
        }
      }
  }
}

TEST(FiniteGroup, QuotientAndPreimage) {
  auto s4 = FiniteGroup::symmetric(4);
  FiniteSubgroup v4;
  for (const auto& n : normal_subgroups(s4))
    if (n.size() == 4) v4 = n;
  ASSERT_EQ(v4.size(), 4u);
  auto q = quotient(s4, v4);
  EXPECT_EQ(q.group.order(), 6);
  EXPECT_FALSE(q.group.is_abelian());
  EXPECT_EQ(preimage(q, trivial_subgroup(q.group)), v4);
  EXPECT_EQ(image(q, whole(s4)), whole(q.group));
  for (int a = 0; a < s4.order(); ++a)
    for (int b = 0; b < s4.order(); ++b)
      EXPECT_EQ(q.projection[s4.mul(a, b)], q.group.mul(q.projection[a], q.projection[b]));
}

TEST(FiniteGroup, FittingSubgroups) {
  EXPECT_EQ(fitting(FiniteGroup::symmetric(4)).size(), 4u);
  EXPECT_EQ(fitting(FiniteGroup::symmetric(3)).size(), 3u);
  EXPECT_EQ(fitting(FiniteGroup::dihedral(6)).size(), 6u);  // rotations
  EXPECT_EQ(fitting(gen::quaternion8()).size(), 8u);
}

TEST(FiniteGroup, FittingContainsEveryNilpotentNormal) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 25; ++i) {
    auto g = gen::random_finite_group(rng, 64);
    auto f = fitting(g);
    EXPECT_TRUE(is_normal(g, f));
    EXPECT_TRUE(is_nilpotent_subgroup(g, f));
    for (const auto& n : normal_subgroups(g))
      if (is_nilpotent_subgroup(g, n)) {
        EXPECT_TRUE(f.contains(n));
      }
  }
}

TEST(FiniteGroup, HypercenterByIntersection) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 25; ++i) {
    auto g = gen::random_finite_group(rng, 64);
    EXPECT_EQ(hypercenter(g), hypercenter_by_intersection(g));
  }
  EXPECT_EQ(hypercenter(FiniteGroup::dihedral(6)).size(), 2u);
  EXPECT_EQ(hypercenter(FiniteGroup::direct_product(FiniteGroup::symmetric(3), FiniteGroup::cyclic(4))).size(), 4u);
}

TEST(FiniteGroup, PPrimePart) {
  auto c12 = FiniteGroup::cyclic(12);
  auto all = whole(c12);
  EXPECT_EQ(p_prime_part(c12, all, 2).size(), 3u);
  EXPECT_EQ(p_prime_part(c12, all, 3).size(), 4u);
  EXPECT_EQ(p_prime_part(c12, all, 0).size(), 12u);
  EXPECT_TRUE(is_p_group(8, 2));
  EXPECT_FALSE(is_p_group(12, 2));
}

TEST(FiniteGroup, AsGroupEmbedding) {
  auto d4 = FiniteGroup::dihedral(4);
  auto rot = generated(d4, {1});
  auto sg = as_group(d4, rot);
  EXPECT_EQ(sg.group.order(), 4);
  EXPECT_TRUE(sg.group.is_abelian());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) EXPECT_EQ(sg.embedding[sg.group.mul(a, b)], d4.mul(sg.embedding[a], sg.embedding[b]));
}
