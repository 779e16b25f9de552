#pragma once

// Integer matrix normal forms: Hermite (row style) and Smith, with the
// unimodular transforms, plus the left kernel and Diophantine solving built
// on them.

#include "hyperc/matrix.hpp"

#include <optional>
#include <utility>

namespace hyperc {

namespace detail {

// rows (r, i) <- (x*r + y*i, u*r + v*i); the 2x2 block must be unimodular.
inline void combine_rows(ZMatrix& m, std::size_t r, std::size_t i, const Integer& x, const Integer& y,
                         const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer a = m(r, j), b = m(i, j);
    m(r, j) = x * a + y * b;
    m(i, j) = u * a + v * b;
  }
}

}  // namespace detail

struct HermiteResult {
  ZMatrix H;  ///< U * A, echelon with positive pivots, zero rows last
  ZMatrix U;  ///< unimodular, only filled when requested
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Row-style Hermite normal form. Entries above each pivot are reduced into
/// [0, pivot), which makes the nonzero rows a canonical basis of the row
/// lattice.
inline HermiteResult hermite(ZMatrix a, bool with_transform = false) {
  const std::size_t m = a.rows(), n = a.cols();
  ZMatrix u = with_transform ? ZMatrix::identity(m) : ZMatrix();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        a.swap_rows(r, i);
        if (with_transform) u.swap_rows(r, i);
        continue;
      }
      const Integer p = a(r, c), q = a(i, c);
      auto [g, x, y] = ext_gcd(p, q);
      const Integer s = -q / g, t = p / g;
      detail::combine_rows(a, r, i, x, y, s, t);
      if (with_transform) detail::combine_rows(u, r, i, x, y, s, t);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negate_row(r);
      if (with_transform) u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(a(i, c), a(r, c));
      if (q == 0) continue;
      a.add_row_multiple(i, r, -q);
      if (with_transform) u.add_row_multiple(i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(u), std::move(pivots)};
}

/// Canonical basis (nonzero HNF rows) of the lattice spanned by the rows.
inline ZMatrix hermite_basis(const ZMatrix& a) {
  auto h = hermite(a);
  return h.H.select_rows(0, h.rank());
}

struct SmithResult {
  ZMatrix U, D, V;  ///< U * A * V = D
  std::size_t rank = 0;
  Integer diag(std::size_t i) const { return i < D.rows() && i < D.cols() ? D(i, i) : Integer(0); }
};

/// Smith normal form with transforms; the nonzero diagonal entries are
/// positive and each divides the next.
inline SmithResult smith(const ZMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  ZMatrix d = a, u = ZMatrix::identity(m), v = ZMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // bring a smallest nonzero entry of the trailing block to (t, t)
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second)))) best = {i, j};
    if (!best) break;
    d.swap_rows(t, best->first);
    u.swap_rows(t, best->first);
    d.swap_cols(t, best->second);
    v.swap_cols(t, best->second);

    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = d(i, t) / d(t, t);
        if (q == 0) continue;
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = d(t, j) / d(t, t);
        if (q == 0) continue;
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
      }
      std::optional<std::size_t> row_hit, col_hit;
      for (std::size_t i = t + 1; i < m; ++i)
        if (d(i, t) != 0 && (!row_hit || abs(d(i, t)) < abs(d(*row_hit, t)))) row_hit = i;
      for (std::size_t j = t + 1; j < n; ++j)
        if (d(t, j) != 0 && (!col_hit || abs(d(t, j)) < abs(d(t, *col_hit)))) col_hit = j;
      if (row_hit) {
        d.swap_rows(t, *row_hit);
        u.swap_rows(t, *row_hit);
        continue;
      }
      if (col_hit) {
        d.swap_cols(t, *col_hit);
        v.swap_cols(t, *col_hit);
        continue;
      }
      // divisibility of the remaining block
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      d.add_row_multiple(t, *bad_row, Integer(1));
      u.add_row_multiple(t, *bad_row, Integer(1));
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v), t};
}

/// Rows spanning {x : x * A = 0} over the integers.
inline ZMatrix left_kernel(const ZMatrix& a) {
  auto h = hermite(a, true);
  ZMatrix k(0, a.rows());
  for (std::size_t i = h.rank(); i < a.rows(); ++i) k.append_row(h.U.row(i));
  return k;
}

/// An integer solution of A x = b, if one exists.
inline std::optional<ZVector> solve_integer(const ZMatrix& a, std::span<const Integer> b) {
  assert(b.size() == a.rows());
  auto s = smith(a);
  ZVector c = s.U.apply(b);
  ZVector z(a.cols(), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      z[i] = c[i] / s.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(z);
}

/// Exact determinant via fraction-free (Bareiss) elimination.
inline Integer determinant(ZMatrix a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline bool is_unimodular(const ZMatrix& a) { return a.rows() == a.cols() && abs(determinant(a)) == 1; }

}  // namespace hyperc
