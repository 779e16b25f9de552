#pragma once

// Finite models (L = 0, X finite, characteristic prime to |X| and |F|) are
// constant groups: D(X) is the dual group Hom(X, Q/Z). to_finite builds the
// Cayley table of D(X) x| F and translates standard subgroups both ways.
//
// A point of D(X) is a vector a with 0 <= a_j < d_j, pairing with a
// character chi as sum_j chi_j a_j / d_j in Q/Z. Elements of the finite
// group are numbered point_index * |F| + f.

#include "hyperc/agmodel.hpp"

#include <map>

namespace hyperc {

struct FiniteBridge {
  FiniteGroup group;
  FgAbelian X;
  std::vector<ZVector> points;
  int nf = 1;

  int element(int point, int f) const { return point * nf + f; }
  int point_of(int e) const { return e / nf; }
  int component_of(int e) const { return e % nf; }

  /// chi(a) in Q/Z, as a representative in [0, 1).
  Rational pairing(const ZVector& a, const ZVector& chi) const {
    Rational s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += Rational(chi[j] * a[j], X.torsion()[j]);
    const Integer fl = floor_div(numerator(s), denominator(s));
    return s - Rational(fl);
  }

  FiniteSubgroup to_finite(const StdSubgroup& s) const {
    if (s.M.rows() > 0) throw PreconditionViolated("bridge: standard subgroup has a unipotent part");
    const auto ys = s.Y.generators();
    FiniteSubgroup out;
    for (std::size_t p = 0; p < points.size(); ++p) {
      bool in = true;
      for (const auto& y : ys) in = in && pairing(points[p], y) == 0;
      if (!in) continue;
      for (int f : s.K.elements) out.elements.push_back(element(static_cast<int>(p), f));
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }

  /// The standard subgroup with this element set, if there is one.
  std::optional<StdSubgroup> from_finite(const FiniteSubgroup& h) const {
    std::vector<int> d_part;
    std::set<int> k;
    for (int e : h.elements) {
      if (component_of(e) == identity_component) d_part.push_back(point_of(e));
      k.insert(component_of(e));
    }
    std::vector<ZVector> annihilator;
    for (const auto& chi : X.elements()) {
      bool kills = true;
      for (int p : d_part) kills = kills && pairing(points[p], chi) == 0;
      if (kills) annihilator.push_back(chi);
    }
    StdSubgroup s{QMatrix(0, 0), Subgroup(X, annihilator), FiniteSubgroup{{k.begin(), k.end()}}, false};
    if (to_finite(s) == h) return s;
    return std::nullopt;
  }

  int identity_component = 0;
};

inline FiniteBridge to_finite(const AlgGroupModel& g) {
  if (g.L.dim() > 0) throw PreconditionViolated("bridge requires a model without unipotent part");
  if (!g.X.is_finite()) throw PreconditionViolated("bridge requires a finite character group");
  const Integer nx = *g.X.order();
  if (g.characteristic != 0 && (nx % g.characteristic == 0 || g.F.order() % g.characteristic == 0))
    throw PreconditionViolated("bridge requires |X| and |F| prime to the characteristic");

  FiniteBridge b;
  b.X = g.X;
  b.points = g.X.elements();
  b.nf = g.F.order();
  b.identity_component = g.F.identity();
  std::map<ZVector, int> index;
  for (std::size_t p = 0; p < b.points.size(); ++p) index[b.points[p]] = static_cast<int>(p);

  const auto& tors = g.X.torsion();
  const std::size_t n = tors.size();
  // dual action: (f.a)_k = d_k sum_j (A_{f^-1})_{jk} a_j / d_j mod d_k
  std::vector<std::vector<int>> act(b.nf, std::vector<int>(b.points.size()));
  for (int f = 0; f < b.nf; ++f) {
    const ZMatrix& ainv = g.action_x[g.F.inv(f)].matrix();
    for (std::size_t p = 0; p < b.points.size(); ++p) {
      ZVector out(n);
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += Rational(ainv(j, k) * b.points[p][j], tors[j]);
        s *= Rational(tors[k]);
        if (!is_integral(s)) throw std::logic_error("dual action is not integral");
        out[k] = mod_floor(numerator(s), tors[k]);
      }
      act[f][p] = index.at(out);
    }
  }
  const int size = static_cast<int>(b.points.size()) * b.nf;
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      const int p1 = b.point_of(x), f1 = b.component_of(x), p2 = b.point_of(y), f2 = b.component_of(y);
      const ZVector& moved = b.points[act[f1][p2]];
      ZVector s = b.points[p1];
      for (std::size_t k = 0; k < n; ++k) s[k] = mod_floor(s[k] + moved[k], tors[k]);
      table[x][y] = b.element(index.at(s), g.F.mul(f1, f2));
    }
  b.group = FiniteGroup(table);
  return b;
}

}  // namespace hyperc
