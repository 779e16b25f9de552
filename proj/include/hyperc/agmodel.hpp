#pragma once

// Models G = (U x| D(X)) x| F over an algebraically closed field of
// characteristic p: U unipotent with graded nilpotent Lie algebra L, D(X) the
// diagonalizable group with character group X, F a finite constant group
// acting on X (and on L). Standard subgroups (M, Y, K) stand for
// U_M x| D(X/Y) x| K; a larger Y means a smaller diagonalizable part.
//
// Conventions: F acts on X on the left, f.chi = A_f chi with A_{fg} = A_f A_g;
// F acts on L by matrices on coordinate columns, with f(L_chi) = L_{f.chi}.

#include "hyperc/finitegrp.hpp"
#include "hyperc/lie.hpp"
#include "hyperc/zlattice.hpp"

#include <compare>
#include <stop_token>
#include <string>
#include <vector>

namespace hyperc {

// ---------------------------------------------------------------------------
// Ordinals below omega^2

struct OrdinalIndex {
  long long m = 0;  ///< multiple of omega
  long long t = 0;

  bool is_finite() const { return m == 0; }
  OrdinalIndex next() const { return {m, t + 1}; }
  friend auto operator<=>(const OrdinalIndex&, const OrdinalIndex&) = default;

  std::string str() const {
    if (m == 0) return std::to_string(t);
    std::string s = "omega*" + std::to_string(m);
    if (t > 0) s += "+" + std::to_string(t);
    return s;
  }
  /// Accepts "t", "omega*m", "omega*m+t" and the bare "omega".
  static OrdinalIndex parse(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed ordinal '" + text + "'"); };
    auto number = [&](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
      return std::stoll(s);
    };
    if (text.rfind("omega", 0) != 0) return {0, number(text)};
    std::string rest = text.substr(5);
    OrdinalIndex o{1, 0};
    if (!rest.empty() && rest[0] == '*') {
      auto plus = rest.find('+');
      o.m = number(rest.substr(1, plus == std::string::npos ? std::string::npos : plus - 1));
      rest = plus == std::string::npos ? "" : rest.substr(plus);
    }
    if (!rest.empty()) {
      if (rest[0] != '+') throw bad();
      o.t = number(rest.substr(1));
    }
    if (o.m == 0) throw bad();
    return o;
  }
};

// ---------------------------------------------------------------------------
// The model

struct AlgGroupModel {
  int characteristic = 0;
  FgAbelian X;
  FiniteGroup F;
  std::vector<LatticeHom> action_x;  ///< one per element of F
  GradedNilLie L;
  std::vector<QMatrix> action_l;  ///< one per element of F, dim L x dim L

  std::size_t dim_l() const { return L.dim(); }
  friend bool operator==(const AlgGroupModel&, const AlgGroupModel&) = default;
};

/// Extends an action given on some elements of F to all of F by
/// multiplicativity. Throws InvalidGroup if the assignment is inconsistent or
/// the listed elements do not generate F.
template <class T, class Mul>
std::vector<T> extend_action(const FiniteGroup& f, const std::vector<std::pair<int, T>>& on_gens, const T& identity,
                             Mul mul) {
  std::vector<std::optional<T>> out(f.order());
  out[f.identity()] = identity;
  std::vector<int> frontier{f.identity()};
  for (std::size_t k = 0; k < frontier.size(); ++k)
    for (const auto& [g, a] : on_gens) {
      const int e = f.mul(frontier[k], g);
      T value = mul(*out[frontier[k]], a);
      if (!out[e]) {
        out[e] = std::move(value);
        frontier.push_back(e);
      } else if (!(*out[e] == value)) {
        throw InvalidGroup("action is not a homomorphism at element " + f.name(e));
      }
    }
  std::vector<T> res;
  for (int e = 0; e < f.order(); ++e) {
    if (!out[e]) throw InvalidGroup("action generators do not generate F");
    res.push_back(std::move(*out[e]));
  }
  return res;
}

inline std::vector<LatticeHom> extend_action_x(const FiniteGroup& f, const FgAbelian& x,
                                               const std::vector<std::pair<int, LatticeHom>>& on_gens) {
  return extend_action(f, on_gens, LatticeHom::identity(x), [](const LatticeHom& a, const LatticeHom& b) { return compose(a, b); });
}
inline std::vector<QMatrix> extend_action_l(const FiniteGroup& f, std::size_t dim,
                                            const std::vector<std::pair<int, QMatrix>>& on_gens) {
  return extend_action(f, on_gens, QMatrix::identity(dim), [](const QMatrix& a, const QMatrix& b) { return a * b; });
}

/// A model with F trivial.
inline AlgGroupModel connected_model(int p, FgAbelian x, GradedNilLie l) {
  AlgGroupModel g;
  g.characteristic = p;
  g.X = x;
  g.action_x = {LatticeHom::identity(x)};
  g.action_l = {QMatrix::identity(l.dim())};
  g.L = std::move(l);
  return g;
}

/// Greedy generating set of a finite group (identity never included).
inline std::vector<int> generating_set(const FiniteGroup& f) {
  std::vector<int> gens;
  FiniteSubgroup reached = trivial_subgroup(f);
  for (int g = 0; g < f.order(); ++g)
    if (!reached.contains(g)) {
      gens.push_back(g);
      reached = generated(f, gens);
    }
  return gens;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Every violated model invariant; empty means valid.
inline std::vector<std::string> validate(const AlgGroupModel& g) {
  std::vector<std::string> out;
  if (g.characteristic != 0 && !is_prime(g.characteristic)) out.push_back("characteristic must be 0 or a prime");
  if (g.characteristic != 0 && g.L.dim() > 0) out.push_back("unipotent part requires characteristic 0");
  const int n = g.F.order();
  if (static_cast<int>(g.action_x.size()) != n) {
    out.push_back("action on the lattice must list one automorphism per element of F");
    return out;
  }
  for (int f = 0; f < n; ++f)
    if (!(g.action_x[f].source() == g.X && g.action_x[f].target() == g.X)) {
      out.push_back("action on the lattice of " + g.F.name(f) + " is not an endomorphism of X");
      return out;
    }
  if (!g.action_x[g.F.identity()].is_identity()) out.push_back("identity of F acts nontrivially on X");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(compose(g.action_x[a], g.action_x[b]) == g.action_x[g.F.mul(a, b)])) {
        out.push_back("action on X is not multiplicative at (" + g.F.name(a) + ", " + g.F.name(b) + ")");
        goto x_done;
      }
x_done:
  for (auto& d : g.L.diagnostics(g.X)) out.push_back(d);
  if (static_cast<int>(g.action_l.size()) != n) {
    out.push_back("action on the Lie algebra must list one matrix per element of F");
    return out;
  }
  const std::size_t d = g.L.dim();
  for (int f = 0; f < n; ++f)
    if (g.action_l[f].rows() != d || g.action_l[f].cols() != d) {
      out.push_back("action on the Lie algebra of " + g.F.name(f) + " has the wrong size");
      return out;
    }
  if (!(g.action_l[g.F.identity()] == QMatrix::identity(d))) out.push_back("identity of F acts nontrivially on L");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(g.action_l[a] * g.action_l[b] == g.action_l[g.F.mul(a, b)])) {
        out.push_back("action on L is not multiplicative at (" + g.F.name(a) + ", " + g.F.name(b) + ")");
        goto l_done;
      }
l_done:
  if (!out.empty()) return out;
  for (int f = 0; f < n; ++f) {
    const QMatrix& a = g.action_l[f];
    for (std::size_t i = 0; i < d; ++i) {
      const ZVector target = g.action_x[f](g.L.weight(i));
      for (std::size_t k = 0; k < d; ++k)
        if (a(k, i) != 0 && g.X.reduce(g.L.weight(k)) != target) {
          out.push_back("action of " + g.F.name(f) + " on L is not equivariant for the grading");
          goto eq_done;
        }
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto lhs = a.apply(g.L.bracket(i, j));
        auto rhs = g.L.bracket(a.col_vec(i), a.col_vec(j));
        if (lhs != rhs) {
          out.push_back("action of " + g.F.name(f) + " does not preserve the bracket");
          goto eq_done;
        }
      }
  }
eq_done:
  return out;
}

// ---------------------------------------------------------------------------
// Standard subgroups

struct StdSubgroup {
  QMatrix M;         ///< rref rows in L coordinates
  Subgroup Y;        ///< the diagonalizable part is D(X/Y)
  FiniteSubgroup K;  ///< subgroup of F
  bool central = false;

  /// Equality ignores the central flag.
  friend bool operator==(const StdSubgroup& a, const StdSubgroup& b) { return a.M == b.M && a.Y == b.Y && a.K == b.K; }
};

inline StdSubgroup make_std(QMatrix m, Subgroup y, FiniteSubgroup k) {
  return {row_space(m), std::move(y), std::move(k), false};
}

inline StdSubgroup trivial_std(const AlgGroupModel& g) {
  return {QMatrix(0, g.L.dim()), Subgroup::whole(g.X), trivial_subgroup(g.F), false};
}
inline StdSubgroup whole_std(const AlgGroupModel& g) {
  return {QMatrix::identity(g.L.dim()), Subgroup::trivial(g.X), whole(g.F), false};
}

/// a contains b.
inline bool contains(const StdSubgroup& a, const StdSubgroup& b) {
  return subspace_contains(a.M.rows() ? a.M : QMatrix(0, b.M.cols()), b.M) && b.Y.contains(a.Y) && a.K.contains(b.K);
}

inline bool is_trivial(const AlgGroupModel& g, const StdSubgroup& s) { return s == trivial_std(g); }

/// Order when the subgroup is finite (M = 0, X/Y finite).
inline std::optional<Integer> order(const StdSubgroup& s) {
  if (s.M.rows() > 0) return std::nullopt;
  auto i = index(s.Y);
  if (!i) return std::nullopt;
  return *i * Integer(s.K.size());
}

inline std::string str(const AlgGroupModel& g, const StdSubgroup& s) {
  std::string out = "M dim " + std::to_string(s.M.rows()) + ", X/Y = " + quotient(s.Y).group.str() + ", K = {";
  for (std::size_t i = 0; i < s.K.elements.size(); ++i) out += (i ? ", " : "") + g.F.name(s.K.elements[i]);
  return out + "}";
}

inline bool is_f_stable(const AlgGroupModel& g, const Subgroup& y) {
  for (const auto& a : g.action_x)
    if (!y.contains(image(a, y))) return false;
  return true;
}

inline bool is_f_stable(const AlgGroupModel& g, const QMatrix& m) {
  for (const auto& a : g.action_l)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!subspace_contains(m, QMatrix::from_rows({a.apply(m.row(r))}, m.cols()))) return false;
  return true;
}

/// Conditions under which S is a normal subgroup and G/S is again a model;
/// empty means satisfied.
inline std::vector<std::string> normality_violations(const AlgGroupModel& g, const StdSubgroup& s) {
  std::vector<std::string> out;
  const std::size_t d = g.L.dim();
  if (s.M.cols() != d) return {"M has the wrong width"};
  if (!(s.Y.ambient() == g.X)) return {"Y is not a subgroup of X"};
  if (!is_subgroup(g.F, s.K.elements)) return {"K is not a subgroup of F"};
  if (!g.L.is_ideal(s.M)) out.push_back("M is not an ideal of L");
  if (!g.L.is_homogeneous(g.X, s.M)) out.push_back("M is not homogeneous");
  if (!is_f_stable(g, s.M)) out.push_back("M is not F-stable");
  if (!is_f_stable(g, s.Y)) out.push_back("Y is not F-stable");
  auto lq = lie_quotient(g.L, s.M);
  for (auto i : lq.kept)
    if (!s.Y.contains(g.X.reduce(g.L.weight(i)))) {
      out.push_back("a weight of L/M is not in Y");
      break;
    }
  if (!is_normal(g.F, s.K)) out.push_back("K is not normal in F");
  for (int k : s.K.elements) {
    bool trivial_on_y = true;
    for (const auto& y : s.Y.generators()) trivial_on_y = trivial_on_y && g.action_x[k](y) == g.X.reduce(y);
    if (!trivial_on_y) {
      out.push_back("K acts nontrivially on Y");
      break;
    }
  }
  for (int k : s.K.elements)
    if (!(lq.induced(g.action_l[k]) == QMatrix::identity(lq.kept.size()))) {
      out.push_back("K acts nontrivially on L/M");
      break;
    }
  return out;
}

inline bool is_normal(const AlgGroupModel& g, const StdSubgroup& s) { return normality_violations(g, s).empty(); }

// ---------------------------------------------------------------------------
// Predicates

inline bool is_connected(const AlgGroupModel& g) {
  if (g.F.order() != 1) return false;
  if (g.characteristic == 0) return g.X.is_torsion_free();
  for (const auto& d : g.X.torsion())
    if (!is_p_group(static_cast<std::size_t>(d), g.characteristic)) return false;
  return true;
}

inline bool is_commutative(const AlgGroupModel& g) {
  if (!g.L.is_abelian() || !g.F.is_abelian()) return false;
  for (const auto& w : g.L.weights())
    if (!g.X.is_zero(w)) return false;
  for (const auto& a : g.action_x)
    if (!a.is_identity()) return false;
  for (const auto& a : g.action_l)
    if (!(a == QMatrix::identity(g.L.dim()))) return false;
  return true;
}

inline bool is_unipotent_subgroup(const AlgGroupModel& g, const StdSubgroup& s) {
  if (!s.Y.is_whole()) return false;
  if (g.characteristic == 0) return s.K.size() == 1;
  return is_p_group(s.K.size(), g.characteristic);
}

inline bool is_mult_type_subgroup(const AlgGroupModel& g, const StdSubgroup& s) {
  if (s.M.rows() > 0) return false;
  auto kg = as_group(g.F, s.K);
  if (!kg.group.is_abelian()) return false;
  if (g.characteristic != 0 && s.K.size() % g.characteristic == 0) return false;
  const Cokernel q = quotient(s.Y);
  for (int k : s.K.elements) {
    auto induced = detail::induced_on_quotient(g.action_x[k], s.Y, q);
    if (!induced || !induced->is_identity()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Center

namespace detail {

inline Subgroup support_subgroup(const AlgGroupModel& g) {
  return Subgroup(g.X, g.L.weights());
}

inline Subgroup augmentation_image(const AlgGroupModel& g) {
  std::vector<ZVector> gens;
  for (int f : generating_set(g.F))
    for (std::size_t j = 0; j < g.X.ngens(); ++j) {
      auto v = g.action_x[f](g.X.basis_vector(j));
      v[j] -= 1;
      gens.push_back(g.X.reduce(v));
    }
  return Subgroup(g.X, gens);
}

inline FiniteSubgroup center_component(const AlgGroupModel& g) {
  FiniteSubgroup k;
  const auto id = QMatrix::identity(g.L.dim());
  for (int f : center(g.F).elements)
    if (g.action_x[f].is_identity() && g.action_l[f] == id) k.elements.push_back(f);
  return k;
}

inline QMatrix center_lie_part(const AlgGroupModel& g) {
  const std::size_t d = g.L.dim();
  QMatrix sys(0, d);
  for (std::size_t i = 0; i < d; ++i)
    if (!g.X.is_zero(g.L.weight(i))) {
      QVector row(d, Rational(0));
      row[i] = 1;
      sys.append_row(row);
    }
  // [v, e_j] = 0
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      QVector row(d);
      for (std::size_t i = 0; i < d; ++i) row[i] = g.L.bracket(i, j)[k];
      sys.append_row(row);
    }
  // f v = v
  for (int f : generating_set(g.F)) {
    QMatrix a = g.action_l[f] - QMatrix::identity(d);
    for (std::size_t r = 0; r < d; ++r) sys.append_row(a.row(r));
  }
  if (d == 0) return QMatrix(0, 0);
  if (sys.rows() == 0) return QMatrix::identity(d);
  return nullspace(sys);
}

}  // namespace detail

/// The subgroup given by (C1)-(C3), without the obstruction check.
inline StdSubgroup standard_center(const AlgGroupModel& g) {
  StdSubgroup z;
  z.M = detail::center_lie_part(g);
  if (z.M.cols() != g.L.dim()) z.M = QMatrix(0, g.L.dim());
  z.Y = sum(detail::augmentation_image(g), detail::support_subgroup(g));
  z.K = detail::center_component(g);
  z.central = true;
  return z;
}

/// Elements f of Z(F) outside the standard center whose action on L can be
/// undone by an F-fixed point of D(X); each gives a central element outside
/// (C1)-(C3).
inline std::vector<int> mixed_center_obstruction(const AlgGroupModel& g) {
  std::vector<int> out;
  const std::size_t d = g.L.dim();
  if (d == 0) return out;
  const auto kz = detail::center_component(g);
  const auto support = g.L.support(g.X);
  const auto aug = detail::augmentation_image(g).generators();
  for (int f : center(g.F).elements) {
    if (kz.contains(f) || !g.action_x[f].is_identity()) continue;
    const QMatrix& a = g.action_l[f];
    std::vector<int> scalar;
    bool ok = true;
    for (const auto& w : support) {
      auto block = g.L.weight_block(g.X, w);
      const Rational c = a(block.front(), block.front());
      for (auto i : block)
        for (std::size_t k = 0; k < d; ++k)
          if (a(k, i) != (k == i ? c : Rational(0))) ok = false;
      if (!ok || (c != 1 && c != -1)) {
        ok = false;
        break;
      }
      scalar.push_back(c == 1 ? 1 : -1);
    }
    if (!ok) continue;
    // a character on <support, (g-1)X> with the prescribed signs exists iff
    // every integer relation has an even total exponent on the -1 generators
    ZMatrix stacked(0, g.X.ngens());
    for (const auto& w : support) stacked.append_row(w);
    for (const auto& v : aug) stacked.append_row(v);
    const ZMatrix rel = g.X.relations();
    if (rel.rows()) stacked.append_rows(rel);
    const ZMatrix kern = left_kernel(stacked);
    bool consistent = true;
    for (std::size_t r = 0; r < kern.rows() && consistent; ++r) {
      Integer odd = 0;
      for (std::size_t k = 0; k < support.size(); ++k)
        if (scalar[k] == -1) odd += kern(r, k);
      consistent = mod_floor(odd, 2) == 0;
    }
    if (consistent) out.push_back(f);
  }
  return out;
}

inline StdSubgroup center(const AlgGroupModel& g) {
  auto obstruction = mixed_center_obstruction(g);
  if (!obstruction.empty()) throw MixedCenterUnsupported("F-component " + g.F.name(obstruction.front()));
  return standard_center(g);
}

// ---------------------------------------------------------------------------
// Quotients by normal standard subgroups

struct ModelQuotient {
  AlgGroupModel model;
  StdSubgroup kernel;
  LieQuotient lie;
  SubgroupPresentation y;
  FiniteQuotient f;

  /// Preimage in the source of a standard subgroup of the quotient.
  StdSubgroup preimage(const StdSubgroup& s) const {
    const std::size_t d = kernel.M.cols();
    QMatrix m = kernel.M.rows() ? kernel.M : QMatrix(0, d);
    for (std::size_t r = 0; r < s.M.rows(); ++r) m.append_row(lie.lift(s.M.row(r), d));
    std::vector<ZVector> gens;
    for (const auto& v : s.Y.generators()) gens.push_back(y.to_ambient(v));
    StdSubgroup out;
    out.M = row_space(m);
    if (out.M.cols() != d) out.M = QMatrix(0, d);
    out.Y = Subgroup(y.ambient, gens);
    out.K = hyperc::preimage(f, s.K);
    return out;
  }

  /// Image in the quotient of a standard subgroup of the source.
  StdSubgroup image(const StdSubgroup& s) const {
    QMatrix m(0, lie.kept.size());
    for (std::size_t r = 0; r < s.M.rows(); ++r) m.append_row(lie.reduce(s.M.row(r)));
    std::vector<ZVector> gens;
    for (const auto& v : intersect(kernel.Y, s.Y).generators()) gens.push_back(y.to_local(kernel.Y, v));
    StdSubgroup out;
    out.M = row_space(m);
    if (out.M.cols() != lie.kept.size()) out.M = QMatrix(0, lie.kept.size());
    out.Y = Subgroup(y.group(), gens);
    out.K = hyperc::image(f, s.K);
    return out;
  }
};

/// G/S for a normal standard subgroup S: L' = L/M, X' = Y, F' = F/K.
inline ModelQuotient quotient(const AlgGroupModel& g, const StdSubgroup& s) {
  auto bad = normality_violations(g, s);
  if (!bad.empty()) throw PreconditionViolated("quotient: " + bad.front());
  ModelQuotient q;
  q.kernel = s;
  q.kernel.M = s.M.rows() ? row_space(s.M) : QMatrix(0, g.L.dim());
  q.lie = lie_quotient(g.L, q.kernel.M);
  q.y = present(s.Y);
  q.f = quotient(g.F, s.K);

  AlgGroupModel out;
  out.characteristic = g.characteristic;
  out.X = q.y.group();
  out.F = q.f.group;
  const std::size_t n = out.X.ngens();
  for (int c = 0; c < out.F.order(); ++c) {
    const int r = q.f.representatives[c];
    ZMatrix mat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto img = g.action_x[r](q.y.to_ambient(out.X.basis_vector(j)));
      auto local = q.y.to_local(s.Y, img);
      for (std::size_t i = 0; i < n; ++i) mat(i, j) = local[i];
    }
    out.action_x.emplace_back(out.X, out.X, mat);
    out.action_l.push_back(q.lie.induced(g.action_l[r]));
  }
  GradedNilLie l = q.lie.algebra;
  for (std::size_t a = 0; a < l.dim(); ++a) l.set_weight(a, q.y.to_local(s.Y, g.X.reduce(l.weight(a))));
  out.L = std::move(l);
  q.model = std::move(out);
  return q;
}

/// S as a model in its own right: L_S = M (rref basis), X_S = X/Y, F_S = K.
inline AlgGroupModel submodel(const AlgGroupModel& g, const StdSubgroup& s) {
  const Cokernel cq = quotient(s.Y);
  AlgGroupModel out;
  out.characteristic = g.characteristic;
  out.X = cq.group;
  auto kg = as_group(g.F, s.K);
  out.F = kg.group;
  auto proj = [&](const ZVector& v) { return cq.group.reduce(cq.projection.apply(v)); };
  GradedNilLie l;
  LieRestriction res;
  if (s.M.rows() > 0) {
    res = lie_restrict(g.L, s.M, g.X);
    l = res.algebra;
    for (std::size_t a = 0; a < l.dim(); ++a) l.set_weight(a, proj(l.weight(a)));
  }
  for (int k : kg.embedding) {
    auto induced = detail::induced_on_quotient(g.action_x[k], s.Y, cq);
    if (!induced) throw PreconditionViolated("submodel: Y is not K-stable");
    out.action_x.push_back(*induced);
    QMatrix a(l.dim(), l.dim());
    for (std::size_t b = 0; b < l.dim(); ++b) {
      auto img = g.action_l[k].apply(res.basis.R.row(b));
      auto c = rref_coordinates(res.basis, img);
      if (!c) throw PreconditionViolated("submodel: M is not K-stable");
      for (std::size_t r = 0; r < l.dim(); ++r) a(r, b) = (*c)[r];
    }
    out.action_l.push_back(std::move(a));
  }
  out.L = std::move(l);
  return out;
}

// ---------------------------------------------------------------------------
// Upper central series

enum class SeriesStatus { Terminated, MixedCenterUnsupported, UndeterminedLimit, Cancelled };

inline const char* to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::Terminated: return "Terminated";
    case SeriesStatus::MixedCenterUnsupported: return "MixedCenterUnsupported";
    case SeriesStatus::UndeterminedLimit: return "UndeterminedLimit";
    case SeriesStatus::Cancelled: return "Cancelled";
  }
  return "?";
}

struct SeriesStage {
  OrdinalIndex ordinal;
  StdSubgroup subgroup;       ///< Z_ordinal(G), in the original model
  AlgGroupModel quotient;     ///< G / Z_ordinal(G)
  std::optional<ChainLimitCertificate> certificate;  ///< limit stages only
};

struct CentralSeriesReport {
  std::vector<SeriesStage> stages;
  OrdinalIndex terminal;
  SeriesStatus status = SeriesStatus::Terminated;
  std::string message;
  int limit_stages = 0;

  const SeriesStage& last() const { return stages.back(); }
  /// Z_alpha(G); past the terminal ordinal of a terminated series this is
  /// the hypercenter.
  std::optional<StdSubgroup> term(const OrdinalIndex& alpha) const {
    for (const auto& s : stages)
      if (s.ordinal == alpha) return s.subgroup;
    if (status == SeriesStatus::Terminated && alpha > terminal) return stages.back().subgroup;
    return std::nullopt;
  }
};

struct UcsOptions {
  int max_finite_steps = 64;
  int max_limit_stages = 8;
  int chain_depth = 32;
};

namespace detail {

// Elements f whose commutators with F lie in k and which act trivially on L/M;
// such f joins the series as soon as it also acts trivially on the current Y.
inline std::vector<int> component_candidates(const AlgGroupModel& g, const QMatrix& m, const FiniteSubgroup& k) {
  auto lq = lie_quotient(g.L, m);
  const auto id = QMatrix::identity(lq.kept.size());
  std::vector<int> out;
  for (int f = 0; f < g.F.order(); ++f) {
    if (k.contains(f)) continue;
    bool ok = true;
    for (int x = 0; x < g.F.order() && ok; ++x) ok = k.contains(g.F.commutator(f, x));
    if (ok && lq.induced(g.action_l[f]) == id) out.push_back(f);
  }
  return out;
}

inline std::size_t free_rank(const Subgroup& y) { return y.ambient().rank() - quotient(y).group.rank(); }

// True when some f in candidates acts trivially on a later term of the chain
// (so the finite part has not settled). A nonzero free part of (A_f - 1)(Y)
// on a rationally stable chain rules this out for good; otherwise the chain
// is followed for depth more steps.
inline bool component_may_grow(const AlgGroupModel& g, const std::vector<int>& candidates, const Subgroup& y_prev,
                               const Subgroup& y_last, const StepOperator& step, int depth) {
  const bool stable_span = free_rank(y_prev) == free_rank(y_last);
  for (int f : candidates) {
    const LatticeHom d = g.action_x[f] - LatticeHom::identity(g.X);
    if (stable_span && free_rank(image(d, y_last)) > 0) continue;
    Subgroup y = y_last;
    for (int i = 0; i <= depth; ++i) {
      if (image(d, y).is_trivial()) return true;
      Subgroup next = step(y);
      if (next == y) break;
      y = std::move(next);
    }
  }
  return false;
}

}  // namespace detail

/// The transfinite upper central series, computed stage by stage as centers
/// of quotients of the original model. When max_finite_steps consecutive
/// finite stages have not stabilized, the M and K parts must have settled and
/// the Y part follows Y -> W + sum_gens (A_f - 1)(Y); its limit is taken with
/// chain_limit and the series continues from there.
inline CentralSeriesReport ucs(const AlgGroupModel& g, const UcsOptions& opt = {}, std::stop_token stop = {}) {
  CentralSeriesReport rep;
  StdSubgroup z = trivial_std(g);
  ModelQuotient q = quotient(g, z);
  rep.stages.push_back({{0, 0}, z, q.model, std::nullopt});
  OrdinalIndex ord{0, 0};
  const auto gens = generating_set(g.F);

  while (true) {
    for (int t = 0;; ++t) {
      if (stop.stop_requested()) {
        rep.status = SeriesStatus::Cancelled;
        rep.terminal = ord;
        rep.message = "cancelled at stage " + ord.str();
        return rep;
      }
      if (auto obs = mixed_center_obstruction(q.model); !obs.empty()) {
        rep.status = SeriesStatus::MixedCenterUnsupported;
        rep.terminal = ord;
        rep.message = "center of G/Z_" + ord.str() + " has a mixed component over " + q.model.F.name(obs.front());
        return rep;
      }
      StdSubgroup next = q.preimage(standard_center(q.model));
      if (next == z) {
        rep.status = SeriesStatus::Terminated;
        rep.terminal = ord;
        return rep;
      }
      if (t == opt.max_finite_steps) break;
      z = next;
      z.central = false;
      ord = ord.next();
      q = quotient(g, z);
      rep.stages.push_back({ord, z, q.model, std::nullopt});
    }

    // limit stage
    if (rep.limit_stages >= opt.max_limit_stages) {
      rep.status = SeriesStatus::UndeterminedLimit;
      rep.terminal = ord;
      rep.message = "limit-stage budget exhausted";
      return rep;
    }
    const std::size_t nst = rep.stages.size();
    if (nst < 2 || rep.stages[nst - 2].ordinal.m != ord.m) {
      rep.status = SeriesStatus::UndeterminedLimit;
      rep.terminal = ord;
      rep.message = "too few finite stages before the limit";
      return rep;
    }
    const StdSubgroup& prev = rep.stages[nst - 2].subgroup;
    const StdSubgroup& last = rep.stages[nst - 1].subgroup;
    if (!(prev.M == last.M) || !(prev.K == last.K)) {
      rep.status = SeriesStatus::UndeterminedLimit;
      rep.terminal = ord;
      rep.message = "unipotent or finite part still growing at the limit";
      return rep;
    }
    StepOperator step;
    {
      std::vector<ZVector> w;
      for (auto i : lie_quotient(g.L, last.M).kept) w.push_back(g.X.reduce(g.L.weight(i)));
      step.offset = Subgroup(g.X, w);
      for (int f : gens) step.maps.push_back(g.action_x[f] - LatticeHom::identity(g.X));
    }
    if (!(step(prev.Y) == last.Y)) {
      rep.status = SeriesStatus::UndeterminedLimit;
      rep.terminal = ord;
      rep.message = "diagonalizable part does not follow the stage step";
      return rep;
    }
    ChainLimit lim = chain_limit(last.Y, step, opt.chain_depth);
    if (lim.certificate.kind == LimitKind::Undetermined) {
      rep.status = SeriesStatus::UndeterminedLimit;
      rep.terminal = ord;
      rep.message = "chain limit undetermined: " + lim.certificate.note;
      return rep;
    }
    if (detail::component_may_grow(g, detail::component_candidates(g, last.M, last.K), prev.Y, last.Y, step,
                                   opt.chain_depth)) {
      rep.status = SeriesStatus::UndeterminedLimit;
      rep.terminal = ord;
      rep.message = "finite part would still grow along the chain";
      return rep;
    }
    z = StdSubgroup{last.M, lim.limit, last.K, false};
    ++rep.limit_stages;
    ord = {ord.m + 1, 0};
    q = quotient(g, z);
    rep.stages.push_back({ord, z, q.model, lim.certificate});
  }
}

inline StdSubgroup z_omega(const AlgGroupModel& g, const UcsOptions& opt = {}) {
  auto rep = ucs(g, opt);
  if (auto s = rep.term({1, 0})) return *s;
  if (rep.status == SeriesStatus::Terminated) return rep.last().subgroup;
  if (rep.status == SeriesStatus::MixedCenterUnsupported) throw MixedCenterUnsupported(rep.message);
  throw UndeterminedLimit(rep.message);
}

struct Hypercenter {
  StdSubgroup subgroup;
  OrdinalIndex lambda;
};

inline Hypercenter hypercenter(const AlgGroupModel& g, const UcsOptions& opt = {}) {
  auto rep = ucs(g, opt);
  if (rep.status == SeriesStatus::MixedCenterUnsupported) throw MixedCenterUnsupported(rep.message);
  if (rep.status != SeriesStatus::Terminated) throw UndeterminedLimit(rep.message);
  const auto& q = rep.last().quotient;
  if (!is_trivial(q, center(q))) throw std::logic_error("hypercenter quotient has a nontrivial center");
  return {rep.last().subgroup, rep.terminal};
}

/// Nilpotency class, nullopt when not nilpotent (the finite part of the
/// series stops below G or a limit stage would be needed).
inline std::optional<int> nilpotency_class(const AlgGroupModel& g, const UcsOptions& opt = {}) {
  UcsOptions o = opt;
  o.max_limit_stages = 0;
  auto rep = ucs(g, o);
  if (rep.status == SeriesStatus::MixedCenterUnsupported) throw MixedCenterUnsupported(rep.message);
  if (rep.status == SeriesStatus::Terminated && rep.terminal.is_finite() && rep.last().subgroup == whole_std(g))
    return static_cast<int>(rep.terminal.t);
  return std::nullopt;
}

inline std::optional<int> nilpotency_class_sub(const AlgGroupModel& g, const StdSubgroup& s, const UcsOptions& opt = {}) {
  return nilpotency_class(submodel(g, s), opt);
}

// ---------------------------------------------------------------------------
// Radicals and Fitting subgroup

inline StdSubgroup rad_u(const AlgGroupModel& g) {
  if (!is_connected(g)) throw NotConnected();
  return {QMatrix::identity(g.L.dim()), Subgroup::whole(g.X), trivial_subgroup(g.F), false};
}

/// Largest nilpotent normal subgroup. Connected models: preimage of Rad_u of
/// G/Z(G). Finite diagonalizable-by-finite models (L = 0, X finite): D(X)
/// times the largest normal K of F with D(X) x| K nilpotent.
inline StdSubgroup fitting(const AlgGroupModel& g) {
  StdSubgroup f;
  if (is_connected(g)) {
    const StdSubgroup z = center(g);
    f = {QMatrix::identity(g.L.dim()), z.Y, z.K, false};
  } else if (g.L.dim() == 0 && g.X.is_finite()) {
    FiniteSubgroup k = trivial_subgroup(g.F);
    for (const auto& n : normal_subgroups(g.F)) {
      if (k.contains(n)) continue;
      if (nilpotency_class_sub(g, {QMatrix(0, 0), Subgroup::trivial(g.X), n, false})) k = join(g.F, k, n);
    }
    f = {QMatrix(0, 0), Subgroup::trivial(g.X), k, false};
  } else {
    throw NotConnected();
  }
  if (!nilpotency_class_sub(g, f)) throw std::logic_error("Fitting subgroup candidate is not nilpotent");
  return f;
}

/// Z(G)_s: the multiplicative-type part of the center.
inline StdSubgroup center_s(const AlgGroupModel& g) {
  const StdSubgroup z = center(g);
  return {QMatrix(0, g.L.dim()), z.Y, p_prime_part(g.F, z.K, g.characteristic), false};
}

// ---------------------------------------------------------------------------
// Unions of ascending chains

/// The union of an explicit finite chain, which is its last term.
inline StdSubgroup chain_union_subgroups(const AlgGroupModel& g, const std::vector<StdSubgroup>& chain) {
  if (chain.empty()) return trivial_std(g);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!contains(chain[i + 1], chain[i])) throw NotAscending("term " + std::to_string(i + 1) + " does not contain term " + std::to_string(i));
  return chain.back();
}

/// A self-similar chain: S_i = (M, T^i(Y_0), K) with T given on the Y part.
struct SubgroupChain {
  StdSubgroup initial;
  StepOperator y_step;

  StdSubgroup term(int i) const {
    StdSubgroup s = initial;
    for (int k = 0; k < i; ++k) s.Y = y_step(s.Y);
    return s;
  }
};

inline StdSubgroup chain_union_subgroups(const AlgGroupModel& g, const SubgroupChain& chain, int max_depth = 32,
                                         int check_prefix = 4) {
  (void)g;
  StdSubgroup cur = chain.initial;
  for (int i = 0; i < check_prefix; ++i) {
    StdSubgroup next = cur;
    next.Y = chain.y_step(cur.Y);
    if (!contains(next, cur)) throw NotAscending("term " + std::to_string(i + 1) + " does not contain term " + std::to_string(i));
    cur = std::move(next);
  }
  ChainLimit lim;
  try {
    lim = chain_limit(chain.initial.Y, chain.y_step, max_depth);
  } catch (const NotDescending&) {
    throw NotAscending("the diagonalizable parts do not grow");
  }
  if (lim.certificate.kind == LimitKind::Undetermined) throw UndeterminedLimit(lim.certificate.note);
  return {chain.initial.M, lim.limit, chain.initial.K, false};
}

}  // namespace hyperc
