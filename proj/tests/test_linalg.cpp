#include "hyperc/intlinalg.hpp"
#include "hyperc/polynomial.hpp"
#include "hyperc/ratlinalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyperc;

namespace {

ZMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  ZMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

void expect_smith_shape(const ZMatrix& a, const SmithResult& s) {
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_TRUE(is_unimodular(s.U));
  EXPECT_TRUE(is_unimodular(s.V));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i != j) {
        EXPECT_EQ(s.D(i, j), 0);
      }
    }
  for (std::size_t i = 0; i < s.rank; ++i) {
    EXPECT_GT(s.D(i, i), 0);
    if (i + 1 < s.rank) {
      EXPECT_EQ(s.D(i + 1, i + 1) % s.D(i, i), 0);
    }
  }
  for (std::size_t i = s.rank; i < std::min(s.D.rows(), s.D.cols()); ++i) EXPECT_EQ(s.D(i, i), 0);
}

}  // namespace

TEST(Smith, DiagonalTwoThree) {
  ZMatrix a{{2, 0}, {0, 3}};
  auto s = smith(a);
  expect_smith_shape(a, s);
  EXPECT_EQ(s.D, (ZMatrix{{1, 0}, {0, 6}}));
}

TEST(Smith, IdentityAndScalar) {
  auto id = ZMatrix::identity(3);
  auto s = smith(id);
  EXPECT_EQ(s.D, id);
  expect_smith_shape(id, s);
  ZMatrix two{{2}};
  EXPECT_EQ(smith(two).D, two);
}

TEST(Smith, RandomMatricesUpToEight) {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
    auto a = random_matrix(rng, m, n, 9);
    if (trial % 5 == 0 && m > 1) a.add_row_multiple(m - 1, 0, Integer(3));  // force rank deficiency sometimes
    expect_smith_shape(a, smith(a));
  }
}

TEST(Hermite, CanonicalForSameLattice) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t k = 1 + rng() % 4, n = 1 + rng() % 4;
    auto a = random_matrix(rng, k, n, 6);
    // a random unimodular change of generators leaves the lattice unchanged
    ZMatrix u = ZMatrix::identity(k);
    for (int step = 0; step < 6; ++step) {
      std::size_t i = rng() % k, j = rng() % k;
      if (i != j) u.add_row_multiple(i, j, Integer(static_cast<int>(rng() % 5) - 2));
    }
    EXPECT_EQ(hermite_basis(a), hermite_basis(u * a));
  }
}

TEST(Hermite, TransformReproducesForm) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 7);
    auto h = hermite(a, true);
    EXPECT_EQ(h.U * a, h.H);
    EXPECT_TRUE(is_unimodular(h.U));
  }
}

TEST(Kernel, LeftKernelAnnihilates) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = 1 + rng() % 6, n = 1 + rng() % 4;
    auto a = random_matrix(rng, m, n, 5);
    auto k = left_kernel(a);
    EXPECT_TRUE((k * a).is_zero());
    EXPECT_EQ(k.rows() + hermite(a).rank(), m);
  }
}

TEST(Solve, IntegerSolutionsAndObstructions) {
  ZMatrix a{{2, 4}, {0, 6}};
  ZVector b{2, 6};
  auto x = solve_integer(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x), b);
  ZVector odd{1, 0};
  EXPECT_FALSE(solve_integer(a, odd));
}

TEST(Determinant, MatchesCofactorExpansion) {
  ZMatrix a{{2, -1, 3}, {0, 4, 1}, {5, 2, -2}};
  // 2*(4*-2 - 1*2) - (-1)*(0*-2 - 1*5) + 3*(0*2 - 4*5) = -20 - 5 - 60
  EXPECT_EQ(determinant(a), -85);
}

TEST(Rational, NullspaceAndIntersection) {
  QMatrix a{{1, 2, 3}, {2, 4, 6}};
  auto ns = nullspace(a);
  EXPECT_EQ(ns.rows(), 2u);
  EXPECT_TRUE((a * ns.transpose()).is_zero());
  QMatrix u{{1, 0, 0}, {0, 1, 0}}, v{{0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(subspace_intersection(u, v), (QMatrix{{0, 1, 0}}));
  auto inv = inverse(QMatrix{{2, 1}, {1, 1}});
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, (QMatrix{{1, -1}, {-1, 2}}));
}

TEST(Polynomial, CharacteristicPolynomial) {
  // diag(1, 2): (x-1)(x-2) = x^2 - 3x + 2
  EXPECT_EQ(characteristic_polynomial(QMatrix{{1, 0}, {0, 2}}), Polynomial({2, -3, 1}));
  // rotation of order 3: x^2 + x + 1
  EXPECT_EQ(characteristic_polynomial(QMatrix{{0, -1}, {1, -1}}), Polynomial({1, 1, 1}));
  EXPECT_EQ(characteristic_polynomial(QMatrix{{-2}}), Polynomial({2, 1}));
}

TEST(Polynomial, FactorizationRecombines) {
  // (x^2 + 1)(x^2 - 3x + 1)(x + 2)^2
  Polynomial a({1, 0, 1}), b({1, -3, 1}), c({2, 1});
  Polynomial p = a * b * c * c;
  auto f = factor_monic(p);
  Polynomial prod({1});
  for (const auto& e : f)
    for (int i = 0; i < e.multiplicity; ++i) prod = prod * e.factor;
  EXPECT_EQ(prod, p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].factor, c);
  EXPECT_EQ(f[0].multiplicity, 2);
}

TEST(Polynomial, IrreducibleQuartic) {
  // x^4 - 10x^2 + 1 has no rational roots and no quadratic factor over Q
  Polynomial p({1, 0, -10, 0, 1});
  auto f = factor_monic(p);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].factor, p);
}

TEST(Polynomial, BruteForceDivisorsAgree) {
  // independent oracle: enumerate all monic quadratics/linears with small
  // coefficients and test exact divisibility
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> d(-3, 3);
    Polynomial p = Polynomial({d(rng), d(rng), 1}) * Polynomial({d(rng), d(rng), 1});
    auto f = factor_monic(p);
    int linear_factors = 0;
    for (const auto& e : f)
      if (e.factor.degree() == 1) linear_factors += e.multiplicity;
    int brute = 0;
    Polynomial rest = p;
    for (int root = -20; root <= 20; ++root) {
      Polynomial lin({-root, 1});
      while (auto q = rest.divide_exact(lin)) {
        rest = *q;
        ++brute;
      }
    }
    EXPECT_EQ(linear_factors, brute) << p.str();
  }
}
