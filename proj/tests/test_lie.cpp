#include "hyperc/lie.hpp"

#include <gtest/gtest.h>

using namespace hyperc;

namespace {

const FgAbelian kZ = FgAbelian::free(1);

GradedNilLie heis(const ZVector& a, const ZVector& b) {
  ZVector c{a[0] + b[0]};
  return GradedNilLie::from_terms(3, {{0, 1, 2, 1}}, {a, b, c});
}

// strictly upper triangular n x n matrices, basis E_ij (i < j), bracket = commutator
GradedNilLie strict_upper(std::size_t n) {
  std::vector<std::pair<int, int>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  auto find = [&](int i, int j) {
    for (std::size_t a = 0; a < idx.size(); ++a)
      if (idx[a] == std::pair{i, j}) return a;
    return idx.size();
  };
  std::vector<BracketTerm> terms;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      auto [i, j] = idx[a];
      auto [k, l] = idx[b];
      if (j == k) terms.push_back({a, b, find(i, l), 1});
      if (l == i) terms.push_back({a, b, find(k, j), -1});
    }
  return GradedNilLie::from_terms(idx.size(), terms, std::vector<ZVector>(idx.size(), ZVector{}));
}

}  // namespace

TEST(Lie, AntisymmetricPartnerIsFilled) {
  auto l = heis({1}, {-1});
  EXPECT_EQ(l.bracket(0, 1)[2], 1);
  EXPECT_EQ(l.bracket(1, 0)[2], -1);
  EXPECT_TRUE(l.diagnostics(kZ).empty());
}

TEST(Lie, HeisenbergInvariants) {
  auto l = heis({1}, {2});
  EXPECT_FALSE(l.is_abelian());
  EXPECT_EQ(l.lower_central_dims(), (std::vector<std::size_t>{3, 1, 0}));
  const QMatrix z = l.center();
  ASSERT_EQ(z.rows(), 1u);
  EXPECT_EQ(z(0, 0), 0);
  EXPECT_EQ(z(0, 1), 0);
  EXPECT_NE(z(0, 2), 0);
}

TEST(Lie, StrictUpperTriangularLowerCentralSeries) {
  // n(n-1)/2, then dims of the superdiagonals >= k
  auto l = strict_upper(4);
  EXPECT_TRUE(l.diagnostics(FgAbelian{}).empty());
  EXPECT_EQ(l.lower_central_dims(), (std::vector<std::size_t>{6, 3, 1, 0}));
  EXPECT_EQ(l.center().rows(), 1u);
}

TEST(Lie, DiagnosticsCatchBrokenInput) {
  // so(3) is a Lie algebra but not nilpotent
  auto so3 = GradedNilLie::from_terms(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}, {{0}, {0}, {0}});
  auto d = so3.diagnostics(kZ);
  ASSERT_FALSE(d.empty());
  EXPECT_FALSE(so3.is_nilpotent());

  // grading: weight of [e0,e1] must be w0 + w1
  auto bad = GradedNilLie::from_terms(3, {{0, 1, 2, 1}}, {{1}, {1}, {1}});
  EXPECT_FALSE(bad.diagnostics(kZ).empty());

  // Jacobi on (e0, e1, e2) leaves e3 while the lower central series still dies
  auto j = GradedNilLie::from_terms(5, {{0, 1, 2, 1}, {0, 2, 3, 1}, {1, 2, 4, 1}, {0, 4, 3, 1}},
                                    std::vector<ZVector>(5, ZVector{}));
  EXPECT_TRUE(j.is_nilpotent());
  EXPECT_FALSE(j.diagnostics(FgAbelian{}).empty());
}

TEST(Lie, BilinearBracketMatchesTable) {
  auto l = strict_upper(4);
  QVector u{1, 2, 0, -1, 0, 3}, v{0, 1, 1, 2, -1, 0};
  QVector expect(6, Rational(0));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) expect[k] += u[i] * v[j] * l.bracket(i, j)[k];
  EXPECT_EQ(l.bracket(u, v), expect);
}

TEST(Lie, WeightBlocksAndHomogeneity) {
  auto l = heis({1}, {-1});
  EXPECT_EQ(l.weight_block(kZ, {1}), (std::vector<std::size_t>{0}));
  EXPECT_EQ(l.weight_block(kZ, {0}), (std::vector<std::size_t>{2}));
  QMatrix mixed{{1, 1, 0}};
  QMatrix pure{{0, 0, 1}};
  EXPECT_FALSE(l.is_homogeneous(kZ, mixed));
  EXPECT_TRUE(l.is_homogeneous(kZ, pure));
  // with all weights equal every subspace is homogeneous
  auto flat = GradedNilLie::from_terms(2, {}, {{0}, {0}});
  EXPECT_TRUE(flat.is_homogeneous(kZ, QMatrix{{1, 1}}));
}

TEST(Lie, QuotientByCenterIsAbelian) {
  auto l = heis({1}, {-1});
  auto q = lie_quotient(l, l.center());
  EXPECT_EQ(q.algebra.dim(), 2u);
  EXPECT_TRUE(q.algebra.is_abelian());
  EXPECT_EQ(q.kept, (std::vector<std::size_t>{0, 1}));
  QVector v{2, 3, 5};
  EXPECT_EQ(q.reduce(v), (QVector{2, 3}));
  EXPECT_EQ(q.lift(q.reduce(v), 3), (QVector{2, 3, 0}));
}

TEST(Lie, QuotientOfStrictUpperByIdealKeepsStructure) {
  auto l = strict_upper(4);
  // the ideal spanned by the corner E_03 (index 2)
  QMatrix m(1, 6);
  m(0, 2) = 1;
  ASSERT_TRUE(l.is_ideal(m));
  auto q = lie_quotient(l, m);
  EXPECT_EQ(q.algebra.dim(), 5u);
  EXPECT_TRUE(q.algebra.diagnostics(FgAbelian{}).empty());
  EXPECT_EQ(q.algebra.lower_central_dims(), (std::vector<std::size_t>{5, 2, 0}));
}

TEST(Lie, RestrictionToSubalgebra) {
  auto l = strict_upper(4);
  // span of E_01 (0), E_12 (3), E_02 (1) is a Heisenberg subalgebra
  QMatrix m(3, 6);
  m(0, 0) = 1;
  m(1, 3) = 1;
  m(2, 1) = 1;
  auto r = lie_restrict(l, m, FgAbelian{});
  EXPECT_EQ(r.algebra.dim(), 3u);
  EXPECT_EQ(r.algebra.lower_central_dims(), (std::vector<std::size_t>{3, 1, 0}));
  // not closed: [E_01, E_13] = E_03
  QMatrix open(2, 6);
  open(0, 0) = 1;
  open(1, 4) = 1;
  EXPECT_THROW(lie_restrict(l, open, FgAbelian{}), std::domain_error);
}

TEST(Lie, AdjointMatrix) {
  auto l = heis({0}, {0});
  QVector e0{1, 0, 0};
  QMatrix ad = l.ad(e0);
  // ad(e0) e1 = e2
  QVector e1{0, 1, 0};
  EXPECT_EQ(ad.apply(e1), (QVector{0, 0, 1}));
}
