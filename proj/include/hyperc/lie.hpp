#pragma once

// Finite-dimensional nilpotent Lie algebras over Q with a homogeneous basis
// e_0..e_{d-1}, each basis vector carrying a weight in a character group X.
// Brackets are stored densely: bracket(i, j) is the coordinate vector of
// [e_i, e_j].

#include "hyperc/ratlinalg.hpp"
#include "hyperc/zlattice.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace hyperc {

struct BracketTerm {
  std::size_t i = 0, j = 0, k = 0;
  Rational c;
};

class GradedNilLie {
 public:
  GradedNilLie() = default;
  explicit GradedNilLie(std::size_t dim) : dim_(dim), table_(dim * dim, QVector(dim, Rational(0))), weights_(dim) {}

  /// [e_i, e_j] = sum c e_k over the listed terms; [e_j, e_i] is filled in
  /// as the negative. Repeated (i, j) pairs accumulate.
  static GradedNilLie from_terms(std::size_t dim, const std::vector<BracketTerm>& terms, std::vector<ZVector> weights) {
    GradedNilLie l(dim);
    for (const auto& t : terms) {
      if (t.i >= dim || t.j >= dim || t.k >= dim) throw std::invalid_argument("bracket index out of range");
      l.table_[t.i * dim + t.j][t.k] += t.c;
      if (t.i != t.j) l.table_[t.j * dim + t.i][t.k] -= t.c;
    }
    if (weights.size() != dim) throw std::invalid_argument("one weight per basis vector is required");
    l.weights_ = std::move(weights);
    return l;
  }

  std::size_t dim() const { return dim_; }
  const QVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  QVector& bracket(std::size_t i, std::size_t j) { return table_[i * dim_ + j]; }
  const std::vector<ZVector>& weights() const { return weights_; }
  const ZVector& weight(std::size_t i) const { return weights_[i]; }
  void set_weight(std::size_t i, ZVector w) { weights_[i] = std::move(w); }

  QVector bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    QVector out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j] == 0) continue;
        const Rational c = u[i] * v[j];
        const auto& b = bracket(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (b[k] != 0) out[k] += c * b[k];
      }
    }
    return out;
  }

  bool is_abelian() const {
    for (const auto& b : table_)
      for (const auto& x : b)
        if (x != 0) return false;
    return true;
  }

  /// Matrix of ad(v) acting on coordinate columns.
  QMatrix ad(std::span<const Rational> v) const {
    QMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      QVector ej(dim_, Rational(0));
      ej[j] = 1;
      auto col = bracket(v, ej);
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
  }

  /// Span of [A, L] for a subspace A given by rows.
  QMatrix bracket_with_all(const QMatrix& a) const {
    QMatrix out(0, dim_);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t j = 0; j < dim_; ++j) {
        QVector ej(dim_, Rational(0));
        ej[j] = 1;
        out.append_row(bracket(a.row(r), ej));
      }
    return row_space(out);
  }

  /// Dimensions of the lower central series L, [L,L], ... down to its limit.
  std::vector<std::size_t> lower_central_dims() const {
    QMatrix term = QMatrix::identity(dim_);
    std::vector<std::size_t> dims{dim_};
    for (std::size_t step = 0; step < dim_ + 1; ++step) {
      QMatrix next = bracket_with_all(term);
      if (next.rows() == term.rows()) break;
      term = next;
      dims.push_back(term.rows());
    }
    return dims;
  }
  bool is_nilpotent() const { return lower_central_dims().back() == 0; }

  /// The center {v : [v, L] = 0}.
  QMatrix center() const {
    // v in center iff sum_i v_i [e_i, e_j] = 0 for every j
    QMatrix sys(0, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        QVector row(dim_);
        for (std::size_t i = 0; i < dim_; ++i) row[i] = bracket(i, j)[k];
        sys.append_row(row);
      }
    if (sys.rows() == 0) return QMatrix::identity(dim_);
    return nullspace(sys);
  }

  bool is_ideal(const QMatrix& m) const { return subspace_contains(m, bracket_with_all(m)); }

  /// Every violated structural condition, in words. Grading is checked in X.
  std::vector<std::string> diagnostics(const FgAbelian& x) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& a = bracket(i, j);
        const auto& b = bracket(j, i);
        for (std::size_t k = 0; k < dim_; ++k)
          if (a[k] + b[k] != 0) {
            out.push_back("bracket is not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            goto antisym_done;
          }
      }
  antisym_done:
    for (std::size_t i = 0; i < dim_ && out.empty(); ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          QVector ei(dim_, Rational(0)), ej(dim_, Rational(0)), ek(dim_, Rational(0));
          ei[i] = ej[j] = ek[k] = 1;
          auto a = bracket(ei, bracket(ej, ek));
          auto b = bracket(ej, bracket(ek, ei));
          auto c = bracket(ek, bracket(ei, ej));
          for (std::size_t r = 0; r < dim_; ++r)
            if (a[r] + b[r] + c[r] != 0) {
              out.push_back("Jacobi identity fails for (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                            std::to_string(k) + ")");
              goto jacobi_done;
            }
        }
  jacobi_done:
    for (std::size_t i = 0; i < dim_; ++i) {
      if (weights_[i].size() != x.ngens()) {
        out.push_back("weight of e" + std::to_string(i) + " has the wrong length");
        return out;
      }
    }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& b = bracket(i, j);
        const auto w = x.add(weights_[i], weights_[j]);
        for (std::size_t k = 0; k < dim_; ++k)
          if (b[k] != 0 && x.reduce(weights_[k]) != w) {
            out.push_back("grading violated: [e" + std::to_string(i) + ", e" + std::to_string(j) + "] has a component of the wrong weight");
            goto grading_done;
          }
      }
  grading_done:
    if (out.empty() && !is_nilpotent()) out.push_back("Lie algebra is not nilpotent");
    return out;
  }

  /// Coordinates with weight equal to w.
  std::vector<std::size_t> weight_block(const FgAbelian& x, const ZVector& w) const {
    std::vector<std::size_t> out;
    const auto rw = x.reduce(w);
    for (std::size_t i = 0; i < dim_; ++i)
      if (x.reduce(weights_[i]) == rw) out.push_back(i);
    return out;
  }

  /// Distinct weights that occur, in first-seen order.
  std::vector<ZVector> support(const FgAbelian& x) const {
    std::vector<ZVector> out;
    for (const auto& w : weights_) {
      auto r = x.reduce(w);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
  }

  /// A subspace is homogeneous iff it is the sum of its intersections with
  /// the weight spaces; equivalently each weight-block projection of each
  /// basis row stays inside it.
  bool is_homogeneous(const FgAbelian& x, const QMatrix& m) const {
    auto basis = rref(m);
    for (const auto& w : support(x)) {
      auto block = weight_block(x, w);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        QVector p(dim_, Rational(0));
        for (auto i : block) p[i] = m(r, i);
        if (!in_row_space(basis, p)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const GradedNilLie&, const GradedNilLie&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<QVector> table_;
  std::vector<ZVector> weights_;
};

/// L/M presented on the images of the non-pivot basis vectors of rref(M).
struct LieQuotient {
  GradedNilLie algebra;
  std::vector<std::size_t> kept;  ///< source indices of the quotient basis
  RrefResult m;

  /// Quotient coordinates of a source vector.
  QVector reduce(std::span<const Rational> v) const {
    QVector w(v.begin(), v.end());
    for (std::size_t r = 0; r < m.rank(); ++r) {
      const Rational c = w[m.pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= c * m.R(r, j);
    }
    QVector out(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) out[a] = w[kept[a]];
    return out;
  }
  QVector lift(std::span<const Rational> v, std::size_t source_dim) const {
    QVector out(source_dim, Rational(0));
    for (std::size_t a = 0; a < kept.size(); ++a) out[kept[a]] = v[a];
    return out;
  }
  /// Induced matrix on the quotient of a source matrix preserving M.
  QMatrix induced(const QMatrix& a) const {
    QMatrix out(kept.size(), kept.size());
    for (std::size_t b = 0; b < kept.size(); ++b) {
      auto col = reduce(a.col_vec(kept[b]));
      for (std::size_t r = 0; r < kept.size(); ++r) out(r, b) = col[r];
    }
    return out;
  }
};

/// Weights of the quotient are left in source coordinates; callers re-express them.
inline LieQuotient lie_quotient(const GradedNilLie& l, const QMatrix& m) {
  LieQuotient q;
  q.m = rref(m.rows() ? m : QMatrix(0, l.dim()));
  std::vector<bool> pivot(l.dim(), false);
  for (auto p : q.m.pivots) pivot[p] = true;
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (!pivot[i]) q.kept.push_back(i);
  const std::size_t d = q.kept.size();
  GradedNilLie out(d);
  for (std::size_t a = 0; a < d; ++a) {
    out.set_weight(a, l.weight(q.kept[a]));
    for (std::size_t b = 0; b < d; ++b) out.bracket(a, b) = q.reduce(l.bracket(q.kept[a], q.kept[b]));
  }
  q.algebra = std::move(out);
  return q;
}

/// The subalgebra spanned by the rows of rref(M), in that basis. M must be
/// a homogeneous subalgebra; rows of its rref are then homogeneous too.
struct LieRestriction {
  GradedNilLie algebra;
  RrefResult basis;
  /// Coordinates of a vector of M in the rref basis.
  QVector coordinates(std::span<const Rational> v) const { return *rref_coordinates(basis, v); }
};

inline LieRestriction lie_restrict(const GradedNilLie& l, const QMatrix& m, const FgAbelian& x) {
  LieRestriction r;
  r.basis = rref(m.rows() ? m : QMatrix(0, l.dim()));
  const std::size_t k = r.basis.rank();
  GradedNilLie out(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::size_t lead = r.basis.pivots[a];
    out.set_weight(a, x.reduce(l.weight(lead)));
    for (std::size_t b = 0; b < k; ++b) {
      auto br = l.bracket(r.basis.R.row(a), r.basis.R.row(b));
      auto c = rref_coordinates(r.basis, br);
      if (!c) throw std::domain_error("subspace is not closed under the bracket");
      out.bracket(a, b) = *c;
    }
  }
  r.algebra = std::move(out);
  return r;
}

}  // namespace hyperc
