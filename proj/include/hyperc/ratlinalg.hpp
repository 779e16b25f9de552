#pragma once

// Exact linear algebra over the rationals. Subspaces are carried as the
// nonzero rows of their reduced row echelon form, which is canonical.

#include "hyperc/matrix.hpp"

#include <optional>

namespace hyperc {

struct RrefResult {
  QMatrix R;  ///< nonzero rows only
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

inline RrefResult rref(QMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = 0; j < n; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i)
      if (i != r && a(i, c) != 0) a.add_row_multiple(i, r, -a(i, c));
    pivots.push_back(c);
    ++r;
  }
  return {a.select_rows(0, r), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& a) { return rref(a).rank(); }

/// Canonical basis of the row space.
inline QMatrix row_space(const QMatrix& a) { return rref(a).R; }

/// Basis (as rows) of {v : A v = 0}.
inline QMatrix nullspace(const QMatrix& a) {
  auto [r, pivots] = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix out(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    out.append_row(v);
  }
  return row_space(out);
}

inline QMatrix subspace_sum(const QMatrix& a, const QMatrix& b) {
  QMatrix s = a;
  s.append_rows(b);
  return row_space(s);
}

/// Intersection of two row spaces in the same ambient dimension.
inline QMatrix subspace_intersection(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.cols();
  if (a.rows() == 0 || b.rows() == 0) return QMatrix(0, n);
  // x*A = y*B  <=>  (x, -y) in the left kernel of [A; B]
  QMatrix stacked = a;
  stacked.append_rows(b);
  QMatrix coeffs = nullspace(stacked.transpose());
  QMatrix out(0, n);
  for (std::size_t k = 0; k < coeffs.rows(); ++k) {
    QVector v(n, Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += coeffs(k, i) * a(i, j);
    out.append_row(v);
  }
  return row_space(out);
}

/// Membership of v in the row space given by an rref basis.
inline bool in_row_space(const RrefResult& basis, std::span<const Rational> v) {
  QVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    const Rational c = w[basis.pivots[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= c * basis.R(i, j);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

inline bool subspace_contains(const QMatrix& big, const QMatrix& small) {
  auto b = rref(big);
  for (std::size_t i = 0; i < small.rows(); ++i)
    if (!in_row_space(b, small.row(i))) return false;
  return true;
}

/// Coordinates of v in an rref basis (v must lie in the span).
inline std::optional<QVector> rref_coordinates(const RrefResult& basis, std::span<const Rational> v) {
  if (!in_row_space(basis, v)) return std::nullopt;
  QVector c(basis.rank());
  for (std::size_t i = 0; i < basis.rank(); ++i) c[i] = v[basis.pivots[i]];
  return c;
}

/// A solution of A x = b, if one exists.
inline std::optional<QVector> solve_rational(const QMatrix& a, std::span<const Rational> b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  QVector x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;
    x[pivots[i]] = r(i, a.cols());
  }
  return x;
}

inline std::optional<QMatrix> inverse(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return QMatrix(0, 0);
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return r.select_cols(n, 2 * n);
}

/// Scales a rational vector to a primitive integer vector (same line).
inline ZVector primitive_integer(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, denominator(x));
  ZVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i] * Rational(den);
    out[i] = numerator(scaled);
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace hyperc
