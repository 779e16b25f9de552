#pragma once

// Finitely generated abelian groups Z^r + Z/d_1 + ... + Z/d_s in invariant
// factor form, their subgroups, homomorphisms between them, and the limit of
// descending subgroup chains Y -> W + sum_j M_j(Y).
//
// Coordinates: an element is an integer vector of length r + s, free
// coordinates first, then one coordinate per invariant factor (reduced into
// [0, d_j) in canonical form). A subgroup S of X is stored as the Hermite
// basis of its full preimage in Z^(r+s); that basis is canonical, so equal
// subgroups compare equal.

#include "hyperc/errors.hpp"
#include "hyperc/intlinalg.hpp"
#include "hyperc/polynomial.hpp"
#include "hyperc/ratlinalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperc {

class FgAbelian {
 public:
  FgAbelian() = default;
  FgAbelian(std::size_t rank, std::vector<Integer> torsion) : rank_(rank), torsion_(std::move(torsion)) {
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
      if (torsion_[j] < 2) throw InvalidGroup("invariant factors must be >= 2");
      if (j > 0 && torsion_[j] % torsion_[j - 1] != 0)
        throw InvalidGroup("invariant factors must form a divisibility chain");
    }
  }
  static FgAbelian free(std::size_t rank) { return {rank, {}}; }
  static FgAbelian cyclic(const Integer& n) { return n == 1 ? FgAbelian{} : FgAbelian{0, {n}}; }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t ngens() const { return rank_ + torsion_.size(); }
  bool is_trivial() const { return ngens() == 0; }
  bool is_finite() const { return rank_ == 0; }
  bool is_torsion_free() const { return torsion_.empty(); }
  /// Order when finite.
  std::optional<Integer> order() const {
    if (rank_ > 0) return std::nullopt;
    Integer n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
  }
  Integer exponent() const {
    Integer e = 1;
    for (const auto& d : torsion_) e = lcm(e, d);
    return e;
  }
  /// Modulus of coordinate i, 0 for free coordinates.
  Integer modulus(std::size_t i) const { return i < rank_ ? Integer(0) : torsion_[i - rank_]; }

  ZVector zero() const { return ZVector(ngens(), Integer(0)); }
  ZVector basis_vector(std::size_t i) const {
    auto v = zero();
    v[i] = 1;
    return v;
  }
  ZVector reduce(ZVector v) const {
    if (v.size() != ngens()) throw AmbientMismatch("element has wrong length");
    for (std::size_t j = 0; j < torsion_.size(); ++j) v[rank_ + j] = mod_floor(v[rank_ + j], torsion_[j]);
    return v;
  }
  bool is_zero(const ZVector& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
      if (x != 0) return false;
    return true;
  }
  ZVector add(const ZVector& a, const ZVector& b) const {
    ZVector s(a);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return reduce(std::move(s));
  }
  ZVector scale(const Integer& k, ZVector a) const {
    for (auto& x : a) x *= k;
    return reduce(std::move(a));
  }
  /// Rows d_j * e_(r+j): the relation lattice of the presentation.
  ZMatrix relations() const {
    ZMatrix rel(torsion_.size(), ngens());
    for (std::size_t j = 0; j < torsion_.size(); ++j) rel(j, rank_ + j) = torsion_[j];
    return rel;
  }

  /// Order of an element, nullopt when infinite.
  std::optional<Integer> element_order(const ZVector& v) const {
    auto r = reduce(v);
    for (std::size_t i = 0; i < rank_; ++i)
      if (r[i] != 0) return std::nullopt;
    Integer o = 1;
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
      const Integer& x = r[rank_ + j];
      if (x != 0) o = lcm(o, torsion_[j] / gcd(torsion_[j], x));
    }
    return o;
  }

  /// All elements of a finite group, in lexicographic coordinate order.
  std::vector<ZVector> elements() const {
    if (rank_ > 0) throw std::domain_error("element enumeration needs a finite group");
    std::vector<ZVector> out{zero()};
    for (std::size_t j = 0; j < torsion_.size(); ++j) {
      std::vector<ZVector> next;
      for (const auto& v : out)
        for (Integer a = 0; a < torsion_[j]; ++a) {
          auto w = v;
          w[rank_ + j] = a;
          next.push_back(std::move(w));
        }
      out = std::move(next);
    }
    return out;
  }

  std::string str() const {
    std::string out;
    if (rank_ > 0) out = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
    for (const auto& d : torsion_) out += (out.empty() ? "Z/" : " + Z/") + d.str();
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const FgAbelian&, const FgAbelian&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// A group in canonical form together with the coordinate change from a
/// presentation (or parent group) to it.
struct Cokernel {
  FgAbelian group;
  ZMatrix projection;  ///< group.ngens() x n: parent coordinates -> canonical
  ZMatrix section;     ///< n x group.ngens(): lifts of the canonical generators
};

namespace detail {

// Z^n / rowspace(rel) in canonical form.
inline Cokernel cokernel_of(const ZMatrix& rel, std::size_t n) {
  ZMatrix a = rel.rows() ? rel : ZMatrix(0, n);
  auto s = smith(a);
  // row vectors: y = x V; coordinate i of y is Z/D_ii for i < rank, free for i >= rank
  auto vinv_q = inverse(to_rational(s.V));
  ZMatrix vinv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vinv(i, j) = numerator((*vinv_q)(i, j));

  std::vector<std::size_t> order;
  std::vector<Integer> torsion;
  for (std::size_t i = s.rank; i < n; ++i) order.push_back(i);
  const std::size_t rank = order.size();
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) {
      order.push_back(i);
      torsion.push_back(s.D(i, i));
    }
  FgAbelian group(rank, torsion);
  ZMatrix proj(order.size(), n), sec(n, order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      proj(k, j) = s.V(j, order[k]);
      sec(j, k) = vinv(order[k], j);
    }
    if (k >= rank)
      for (std::size_t j = 0; j < n; ++j) proj(k, j) = mod_floor(proj(k, j), torsion[k - rank]);
  }
  return {std::move(group), std::move(proj), std::move(sec)};
}

}  // namespace detail

/// Canonical form of Z^n / (row lattice of relations).
inline Cokernel from_presentation(const ZMatrix& relations, std::size_t ngens) {
  if (relations.rows() && relations.cols() != ngens) throw AmbientMismatch("relation width");
  return detail::cokernel_of(relations, ngens);
}

class Subgroup {
 public:
  Subgroup() = default;
  /// Subgroup generated by the given elements (rows or list).
  Subgroup(FgAbelian ambient, const std::vector<ZVector>& generators) : ambient_(std::move(ambient)) {
    ZMatrix m = ambient_.relations();
    if (m.rows() == 0) m = ZMatrix(0, ambient_.ngens());
    for (const auto& g : generators) {
      if (g.size() != ambient_.ngens()) throw AmbientMismatch("generator has wrong length");
      m.append_row(g);
    }
    set_lattice(m);
  }
  static Subgroup trivial(const FgAbelian& x) { return Subgroup(x, {}); }
  static Subgroup whole(const FgAbelian& x) {
    std::vector<ZVector> gens;
    for (std::size_t i = 0; i < x.ngens(); ++i) gens.push_back(x.basis_vector(i));
    return Subgroup(x, gens);
  }
  /// From a full-preimage lattice (must contain the relations).
  static Subgroup from_lattice(FgAbelian ambient, const ZMatrix& lattice) {
    Subgroup s;
    s.ambient_ = std::move(ambient);
    ZMatrix m = s.ambient_.relations();
    if (m.rows() == 0) m = ZMatrix(0, s.ambient_.ngens());
    m.append_rows(lattice);
    s.set_lattice(m);
    return s;
  }

  const FgAbelian& ambient() const { return ambient_; }
  /// Hermite basis of the full preimage in Z^n.
  const ZMatrix& lattice() const { return basis_; }

  /// Canonical generators: the Hermite rows, reduced, with zeros dropped.
  std::vector<ZVector> generators() const {
    std::vector<ZVector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      auto v = ambient_.reduce(basis_.row_vec(i));
      if (!ambient_.is_zero(v)) out.push_back(std::move(v));
    }
    return out;
  }

  /// Coefficients c with c * lattice() = v, if v lies in the preimage lattice.
  std::optional<ZVector> lattice_coordinates(const ZVector& v) const {
    if (v.size() != ambient_.ngens()) throw AmbientMismatch("element has wrong length");
    ZVector rem = v;
    ZVector c(basis_.rows(), Integer(0));
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      const auto p = pivots_[i];
      const Integer& piv = basis_(i, p);
      if (rem[p] % piv != 0) return std::nullopt;
      c[i] = rem[p] / piv;
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= c[i] * basis_(i, j);
    }
    for (const auto& x : rem)
      if (x != 0) return std::nullopt;
    return c;
  }
  bool contains(const ZVector& v) const { return lattice_coordinates(v).has_value(); }
  bool contains(const Subgroup& other) const {
    check_same(other);
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
      if (!contains(other.basis_.row_vec(i))) return false;
    return true;
  }
  bool is_trivial() const { return generators().empty(); }
  bool is_whole() const { return contains(Subgroup::whole(ambient_)); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_same(const Subgroup& other) const {
    if (!(ambient_ == other.ambient_)) throw AmbientMismatch(ambient_.str() + " vs " + other.ambient_.str());
  }

 private:
  void set_lattice(const ZMatrix& m) {
    auto h = hermite(m.rows() ? m : ZMatrix(0, ambient_.ngens()));
    basis_ = h.H.select_rows(0, h.rank());
    if (basis_.cols() != ambient_.ngens()) basis_ = ZMatrix(0, ambient_.ngens());
    pivots_ = h.pivots;
  }

  FgAbelian ambient_;
  ZMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subgroup sum(const Subgroup& a, const Subgroup& b) {
  a.check_same(b);
  ZMatrix m = a.lattice();
  m.append_rows(b.lattice());
  return Subgroup::from_lattice(a.ambient(), m);
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  a.check_same(b);
  const std::size_t n = a.ambient().ngens();
  const ZMatrix& ba = a.lattice();
  const ZMatrix& bb = b.lattice();
  if (ba.rows() == 0 || bb.rows() == 0) return Subgroup::trivial(a.ambient());
  ZMatrix stacked = ba;
  stacked.append_rows(bb);
  ZMatrix k = left_kernel(stacked);
  ZMatrix out(0, n);
  for (std::size_t r = 0; r < k.rows(); ++r) {
    ZVector v(n, Integer(0));
    for (std::size_t i = 0; i < ba.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += k(r, i) * ba(i, j);
    out.append_row(v);
  }
  return Subgroup::from_lattice(a.ambient(), out);
}

/// X / S in canonical form with the projection from X coordinates.
inline Cokernel quotient(const Subgroup& s) { return detail::cokernel_of(s.lattice(), s.ambient().ngens()); }

/// |X / S|, nullopt when infinite.
inline std::optional<Integer> index(const Subgroup& s) { return quotient(s).group.order(); }

inline Subgroup torsion_part(const Subgroup& s) {
  const auto& x = s.ambient();
  std::vector<ZVector> tors;
  for (std::size_t j = x.rank(); j < x.ngens(); ++j) tors.push_back(x.basis_vector(j));
  return intersect(s, Subgroup(x, tors));
}

/// {x : n x in S for some n >= 1}.
inline Subgroup saturation(const Subgroup& s) {
  const auto& x = s.ambient();
  const std::size_t n = x.ngens();
  if (s.lattice().rows() == 0) return Subgroup::trivial(x);
  auto sm = smith(s.lattice());
  auto vinv = inverse(to_rational(sm.V));
  ZMatrix out(0, n);
  for (std::size_t i = 0; i < sm.rank; ++i) {
    ZVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = numerator((*vinv)(i, j));
    out.append_row(row);
  }
  return Subgroup::from_lattice(x, out);
}

/// The abstract group underlying a subgroup, with the inclusion into X.
struct SubgroupPresentation {
  Cokernel local;     ///< group in canonical form; projection from lattice coefficients
  ZMatrix basis;      ///< preimage lattice basis (k x n)
  ZMatrix inclusion;  ///< n x local.group.ngens(), columns reduced in X
  FgAbelian ambient;

  const FgAbelian& group() const { return local.group; }
  /// Local coordinates of an element of X lying in the subgroup.
  ZVector to_local(const Subgroup& s, const ZVector& v) const {
    auto c = s.lattice_coordinates(v);
    if (!c) throw std::domain_error("element not in subgroup");
    return local.group.reduce(local.projection.apply(*c));
  }
  ZVector to_ambient(const ZVector& y) const { return ambient.reduce(inclusion.apply(y)); }
};

inline SubgroupPresentation present(const Subgroup& s) {
  const auto& x = s.ambient();
  const ZMatrix& b = s.lattice();
  const std::size_t k = b.rows();
  // express the relations of X in the lattice basis
  ZMatrix rel = x.relations();
  ZMatrix local_rel(0, k);
  for (std::size_t i = 0; i < rel.rows(); ++i) local_rel.append_row(*s.lattice_coordinates(rel.row_vec(i)));
  Cokernel local = detail::cokernel_of(local_rel, k);
  ZMatrix inc = b.rows() ? b.transpose() * local.section : ZMatrix(x.ngens(), local.group.ngens());
  for (std::size_t c = 0; c < inc.cols(); ++c) {
    auto col = x.reduce(inc.col_vec(c));
    for (std::size_t r = 0; r < inc.rows(); ++r) inc(r, c) = col[r];
  }
  return {std::move(local), b, std::move(inc), x};
}

/// Homomorphism between finitely generated abelian groups, as the integer
/// matrix acting on coordinate columns.
class LatticeHom {
 public:
  LatticeHom() = default;
  LatticeHom(FgAbelian source, FgAbelian target, ZMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
      throw AmbientMismatch("homomorphism matrix has wrong shape");
    // canonical columns, and relations must map into relations
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      auto col = target_.reduce(matrix_.col_vec(c));
      for (std::size_t r = 0; r < matrix_.rows(); ++r) matrix_(r, c) = col[r];
      const Integer m = source_.modulus(c);
      if (m != 0 && !target_.is_zero(target_.scale(m, col)))
        throw InvalidGroup("matrix does not respect the relations of the source group");
    }
  }
  static LatticeHom identity(const FgAbelian& x) { return {x, x, ZMatrix::identity(x.ngens())}; }
  static LatticeHom zero(const FgAbelian& s, const FgAbelian& t) { return {s, t, ZMatrix(t.ngens(), s.ngens())}; }

  const FgAbelian& source() const { return source_; }
  const FgAbelian& target() const { return target_; }
  const ZMatrix& matrix() const { return matrix_; }

  ZVector operator()(const ZVector& v) const { return target_.reduce(matrix_.apply(v)); }
  bool is_zero() const { return matrix_.is_zero(); }
  bool is_identity() const { return source_ == target_ && matrix_ == ZMatrix::identity(source_.ngens()); }

  friend LatticeHom compose(const LatticeHom& f, const LatticeHom& g) {  // f after g
    if (!(g.target_ == f.source_)) throw AmbientMismatch("composition");
    return {g.source_, f.target_, f.matrix_ * g.matrix_};
  }
  friend LatticeHom operator-(const LatticeHom& f, const LatticeHom& g) {
    if (!(f.source_ == g.source_ && f.target_ == g.target_)) throw AmbientMismatch("difference");
    return {f.source_, f.target_, f.matrix_ - g.matrix_};
  }
  friend bool operator==(const LatticeHom&, const LatticeHom&) = default;

 private:
  FgAbelian source_, target_;
  ZMatrix matrix_;
};

using LatticeEndo = LatticeHom;

inline Subgroup image(const LatticeHom& h, const Subgroup& s) {
  if (!(s.ambient() == h.source())) throw AmbientMismatch("image: subgroup not in source");
  std::vector<ZVector> gens;
  for (std::size_t i = 0; i < s.lattice().rows(); ++i) gens.push_back(h(s.lattice().row_vec(i)));
  return Subgroup(h.target(), gens);
}

inline Subgroup preimage(const LatticeHom& h, const Subgroup& s) {
  if (!(s.ambient() == h.target())) throw AmbientMismatch("preimage: subgroup not in target");
  const std::size_t n = h.source().ngens();
  if (n == 0) return Subgroup::trivial(h.source());
  ZMatrix stacked = h.matrix().transpose();
  if (s.lattice().rows()) stacked.append_rows(s.lattice());
  ZMatrix k = left_kernel(stacked);
  return Subgroup::from_lattice(h.source(), k.select_cols(0, n));
}

inline Subgroup kernel(const LatticeHom& h) { return preimage(h, Subgroup::trivial(h.target())); }

// ---------------------------------------------------------------------------
// Descending chain limits

/// Y -> W + sum_j maps[j](Y).
struct StepOperator {
  Subgroup offset;
  std::vector<LatticeEndo> maps;

  Subgroup operator()(const Subgroup& y) const {
    Subgroup out = offset;
    for (const auto& m : maps) out = sum(out, image(m, y));
    return out;
  }
};

enum class LimitKind { FixedPoint, UnitFactorSplit, Undetermined };

inline const char* to_string(LimitKind k) {
  switch (k) {
    case LimitKind::FixedPoint: return "FixedPoint";
    case LimitKind::UnitFactorSplit: return "UnitFactorSplit";
    case LimitKind::Undetermined: return "Undetermined";
  }
  return "?";
}

struct ChainLimitCertificate {
  LimitKind kind = LimitKind::Undetermined;
  int depth = 0;
  /// UnitFactorSplit only: factorization of the characteristic polynomial of
  /// the governing map on the stable rational span (modulo the offset), the
  /// factors with constant term +-1, and a basis of their invariant subspace
  /// in free coordinates of X/W.
  std::vector<Factor> factorization;
  std::vector<Factor> unit_factors;
  QMatrix unit_subspace;
  std::string note;
};

struct ChainLimit {
  Subgroup limit;
  ChainLimitCertificate certificate;
};

namespace detail {

// The induced map on X/W, nullopt unless m(W) is contained in W.
inline std::optional<LatticeHom> induced_on_quotient(const LatticeEndo& m, const Subgroup& w, const Cokernel& q) {
  if (!w.contains(image(m, w))) return std::nullopt;
  return LatticeHom(q.group, q.group, q.projection * m.matrix() * q.section);
}

// Limit of the chain N, M(N), M^2(N), ... inside Xbar; nullopt if the
// torsion part fails to settle within max_depth steps.
inline std::optional<std::pair<Subgroup, ChainLimitCertificate>> unit_factor_split(const Subgroup& n,
                                                                                  const LatticeHom& m,
                                                                                  int max_depth) {
  const FgAbelian& xb = m.source();
  const std::size_t r = xb.rank();
  ChainLimitCertificate cert;
  cert.kind = LimitKind::UnitFactorSplit;

  // rational span of N in the free coordinates
  QMatrix free_rows(0, r);
  for (const auto& g : n.generators()) {
    QVector row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = g[i];
    free_rows.append_row(row);
  }
  RrefResult span = rref(free_rows.rows() ? free_rows : QMatrix(0, r));
  const std::size_t v = span.rank();

  QMatrix unit_basis(0, r);
  if (v > 0) {
    QMatrix mf(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) mf(i, j) = Rational(m.matrix()(i, j));
    // matrix of the restriction in the basis rows of span (column convention)
    QMatrix restricted(v, v);
    for (std::size_t k = 0; k < v; ++k) {
      QVector image = mf.apply(span.R.row(k));
      auto coords = rref_coordinates(span, image);
      if (!coords) return std::nullopt;  // span not invariant; cannot happen for a descending chain
      for (std::size_t l = 0; l < v; ++l) restricted(l, k) = (*coords)[l];
    }
    Polynomial chi = characteristic_polynomial(restricted);
    cert.factorization = factor_monic(chi);
    Polynomial unit_part({Integer(1)});
    for (const auto& f : cert.factorization)
      if (abs(f.factor.constant_term()) == 1) {
        cert.unit_factors.push_back(f);
        for (int e = 0; e < f.multiplicity; ++e) unit_part = unit_part * f.factor;
      }
    QMatrix ker = nullspace(evaluate(unit_part, restricted));
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      QVector w(r, Rational(0));
      for (std::size_t l = 0; l < v; ++l)
        for (std::size_t j = 0; j < r; ++j) w[j] += ker(k, l) * span.R(l, j);
      unit_basis.append_row(w);
    }
    unit_basis = row_space(unit_basis);
  }
  cert.unit_subspace = unit_basis;

  // {y in Xbar : free part of y in the unit subspace}
  std::vector<ZVector> gens;
  for (std::size_t k = 0; k < unit_basis.rows(); ++k) {
    ZVector iv = primitive_integer(unit_basis.row(k));
    iv.resize(xb.ngens(), Integer(0));
    gens.push_back(std::move(iv));
  }
  Subgroup unit_lattice = saturation(Subgroup(xb, gens));
  for (std::size_t j = r; j < xb.ngens(); ++j) unit_lattice = sum(unit_lattice, Subgroup(xb, {xb.basis_vector(j)}));

  Subgroup s = intersect(n, unit_lattice);
  for (int it = 0; it <= max_depth; ++it) {
    Subgroup next = image(m, s);
    if (next == s) return std::make_pair(s, cert);
    s = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

/// Intersection of the descending chain start, T(start), T^2(start), ...
/// Throws NotDescending unless T(start) is contained in start.
inline ChainLimit chain_limit(const Subgroup& start, const StepOperator& step, int max_depth = 32) {
  const FgAbelian& x = start.ambient();
  start.check_same(step.offset);
  for (const auto& m : step.maps)
    if (!(m.source() == x && m.target() == x)) throw AmbientMismatch("step map is not an endomorphism of the ambient");
  if (!start.contains(step(start))) throw NotDescending();

  // governing endomorphism on X/W
  const Cokernel q = quotient(step.offset);
  std::optional<LatticeHom> governing;
  bool governed = true;
  std::vector<LatticeHom> induced;
  for (const auto& m : step.maps) {
    auto im = detail::induced_on_quotient(m, step.offset, q);
    if (!im) {
      governed = false;
      break;
    }
    if (im->is_zero()) continue;
    bool seen = false;
    for (const auto& e : induced) seen = seen || e == *im;
    if (!seen) induced.push_back(*im);
  }
  if (governed && induced.size() == 1) governing = induced.front();
  if (governed && induced.empty()) governing = LatticeHom::zero(q.group, q.group);

  Subgroup y = start;
  auto free_rank = [](const Subgroup& s) { return s.ambient().rank() - quotient(s).group.rank(); };
  for (int depth = 0; depth < max_depth; ++depth) {
    Subgroup next = step(y);
    if (next == y) {
      ChainLimitCertificate cert;
      cert.kind = LimitKind::FixedPoint;
      cert.depth = depth;
      return {y, cert};
    }
    if (governing && free_rank(next) == free_rank(y) && !(step(next) == next)) {
      Subgroup nbar = image(LatticeHom(x, q.group, q.projection), next);
      if (auto split = detail::unit_factor_split(nbar, *governing, max_depth)) {
        auto& [s, cert] = *split;
        cert.depth = depth + 1;
        ZMatrix proj = q.projection;
        Subgroup limit = preimage(LatticeHom(x, q.group, proj), s);
        return {limit, cert};
      }
    }
    y = std::move(next);
  }
  ChainLimitCertificate cert;
  cert.kind = LimitKind::Undetermined;
  cert.depth = max_depth;
  cert.note = governing ? "torsion part did not settle" : "step is not governed by a single endomorphism";
  return {y, cert};
}

}  // namespace hyperc
