#pragma once

// Instance families: the named examples and seeded random models and groups.

#include "hyperc/bridge.hpp"

#include <random>

namespace hyperc {

struct Instance {
  std::string id;
  AlgGroupModel model;
  std::optional<int> faithful_dim;  ///< dimension of a declared faithful representation
};

namespace gen {

inline LatticeHom endo(const FgAbelian& x, ZMatrix m) { return LatticeHom(x, x, std::move(m)); }

inline AlgGroupModel with_cyclic_action(int p, const FgAbelian& x, int order, const ZMatrix& generator) {
  AlgGroupModel g;
  g.characteristic = p;
  g.X = x;
  g.F = FiniteGroup::cyclic(order);
  g.action_x = extend_action_x(g.F, x, {{1 % order, endo(x, generator)}});
  g.action_l.assign(order, QMatrix(0, 0));
  return g;
}

/// G_m x| Z/2 with the inversion, in characteristic p.
inline AlgGroupModel example1(int p) { return with_cyclic_action(p, FgAbelian::free(1), 2, ZMatrix{{-1}}); }

/// l = 2: Z/2 inverting Z. l = 3: Z/3 acting on Z^2 by an order-3 rotation.
inline AlgGroupModel mu_chain(int l, int p) {
  if (l == 2) return example1(p);
  if (l == 3) return with_cyclic_action(p, FgAbelian::free(2), 3, ZMatrix{{0, -1}, {1, -1}});
  throw CapExceeded("mu_chain supports l = 2 or 3");
}

/// D(Z/2^n) x| Z/2 with the inversion: the dual of a dihedral group of order 2^(n+1).
inline AlgGroupModel dihedral_dual(int n, int p = 0) {
  if (n < 1 || n > 6) throw CapExceeded("dihedral_dual supports 1 <= n <= 6");
  return with_cyclic_action(p, FgAbelian(0, {Integer(1) << n}), 2, ZMatrix{{-1}});
}

inline GradedNilLie heisenberg_lie(const ZVector& w0, const ZVector& w1, const Rational& c = 1) {
  ZVector w2(w0.size());
  for (std::size_t i = 0; i < w0.size(); ++i) w2[i] = w0[i] + w1[i];
  return GradedNilLie::from_terms(3, {{0, 1, 2, c}}, {w0, w1, w2});
}

/// Heisenberg group with a torus acting with weights (w0, w1, w0 + w1); X = Z^r.
inline AlgGroupModel heisenberg_torus(const ZVector& w0, const ZVector& w1, const ZVector& w2) {
  for (std::size_t i = 0; i < w0.size(); ++i)
    if (w2.size() != w0.size() || w1.size() != w0.size() || w2[i] != w0[i] + w1[i])
      throw std::invalid_argument("heisenberg_torus needs w3 = w1 + w2");
  return connected_model(0, FgAbelian::free(w0.size()), heisenberg_lie(w0, w1));
}

/// The Heisenberg group alone (X = 0).
inline AlgGroupModel heisenberg() { return connected_model(0, FgAbelian{}, heisenberg_lie({}, {})); }

/// G_a x| G_m with weight w.
inline AlgGroupModel ga_gm(const Integer& w) {
  return connected_model(0, FgAbelian::free(1), GradedNilLie::from_terms(1, {}, {{w}}));
}

/// Weight-zero Lie algebra of nilpotency class c (1 <= c <= 3) of dimension c + 1.
inline GradedNilLie class_c_lie(int c, std::size_t rank) {
  const ZVector z(rank, Integer(0));
  if (c == 1) return GradedNilLie::from_terms(1, {}, {z});
  if (c == 2) return GradedNilLie::from_terms(3, {{0, 1, 2, 1}}, {z, z, z});
  if (c == 3) return GradedNilLie::from_terms(4, {{0, 1, 2, 1}, {0, 2, 3, 1}}, {z, z, z, z});
  throw CapExceeded("class_c_lie supports 1 <= c <= 3");
}

/// U_c x (G_m x| Z/2), with U_c of class c and Z/2 acting trivially on U_c.
inline AlgGroupModel chain_model(int c) {
  AlgGroupModel g = example1(0);
  g.L = class_c_lie(c, 1);
  g.action_l = {QMatrix::identity(g.L.dim()), QMatrix::identity(g.L.dim())};
  return g;
}

/// The chain U_c . mu_{2^i} inside chain_model(c).
inline SubgroupChain class_c_chain(const AlgGroupModel& g) {
  SubgroupChain ch;
  ch.initial = {QMatrix::identity(g.L.dim()), Subgroup::whole(g.X), trivial_subgroup(g.F), false};
  ch.y_step.offset = Subgroup::trivial(g.X);
  ch.y_step.maps = {g.action_x[1] - LatticeHom::identity(g.X)};
  return ch;
}

// ---------------------------------------------------------------------------
// Random connected models: F = 1, rank X <= 3, dim L <= 4.

inline ZVector random_weight(std::mt19937_64& rng, std::size_t r, bool allow_zero = true) {
  std::uniform_int_distribution<int> d(-2, 2);
  ZVector w(r);
  for (auto& x : w) x = d(rng);
  if (allow_zero && rng() % 4 == 0) std::fill(w.begin(), w.end(), Integer(0));
  return w;
}

inline Rational random_coefficient(std::mt19937_64& rng) {
  static const Rational choices[] = {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(-3)};
  return choices[rng() % 5];
}

inline AlgGroupModel random_connected(std::mt19937_64& rng) {
  while (true) {
    const std::size_t r = rng() % 4;
    if (rng() % 8 == 0) {
      // characteristic p with p-primary torsion: connected, L = 0
      const int p = (rng() % 2) ? 2 : 3;
      FgAbelian x(r, {Integer(p), Integer(p * p)});
      return connected_model(p, x, GradedNilLie(0));
    }
    auto w = [&] { return random_weight(rng, r); };
    auto plus = [](const ZVector& a, const ZVector& b) {
      ZVector s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      return s;
    };
    GradedNilLie l;
    switch (rng() % 5) {
      case 0: {
        const std::size_t k = rng() % 5;
        std::vector<ZVector> ws;
        for (std::size_t i = 0; i < k; ++i) ws.push_back(w());
        l = GradedNilLie::from_terms(k, {}, ws);
        break;
      }
      case 1: {
        auto a = w(), b = w();
        l = GradedNilLie::from_terms(3, {{0, 1, 2, random_coefficient(rng)}}, {a, b, plus(a, b)});
        break;
      }
      case 2: {
        auto a = w(), b = w();
        l = GradedNilLie::from_terms(4, {{0, 1, 2, random_coefficient(rng)}}, {a, b, plus(a, b), w()});
        break;
      }
      case 3: {
        auto a = w(), b = w();
        auto ab = plus(a, b);
        l = GradedNilLie::from_terms(4, {{0, 1, 2, random_coefficient(rng)}, {0, 2, 3, random_coefficient(rng)}},
                                     {a, b, ab, plus(a, ab)});
        break;
      }
      default: {
        // [e0, e1] = c e3, [e0, e2] = c' e3 with w1 = w2
        auto a = w(), b = w();
        l = GradedNilLie::from_terms(4, {{0, 1, 3, random_coefficient(rng)}, {0, 2, 3, random_coefficient(rng)}},
                                     {a, b, b, plus(a, b)});
        break;
      }
    }
    auto g = connected_model(0, FgAbelian::free(r), l);
    if (validate(g).empty()) return g;
  }
}

// ---------------------------------------------------------------------------
// Random finite models (L = 0, X finite, |F| <= 16): F generated by random
// automorphisms of X, possibly times a cyclic group acting trivially.

inline std::vector<FgAbelian> small_finite_lattices() {
  std::vector<FgAbelian> out;
  for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 12}) out.push_back(FgAbelian(0, {Integer(n)}));
  out.push_back(FgAbelian(0, {2, 2}));
  out.push_back(FgAbelian(0, {2, 4}));
  out.push_back(FgAbelian(0, {3, 3}));
  out.push_back(FgAbelian(0, {2, 2, 2}));
  out.push_back(FgAbelian(0, {4, 4}));
  return out;
}

/// A random automorphism of a finite X, if the sampled matrix is one.
inline std::optional<LatticeHom> random_automorphism(std::mt19937_64& rng, const FgAbelian& x) {
  const std::size_t n = x.ngens();
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long long mod = static_cast<long long>(x.modulus(i));
      m(i, j) = static_cast<long long>(rng() % mod);
    }
  try {
    LatticeHom h(x, x, m);
    std::set<ZVector> images;
    for (const auto& v : x.elements()) images.insert(h(v));
    if (images.size() != static_cast<std::size_t>(*x.order())) return std::nullopt;
    return h;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// L = 0 model on a finite X, with F acting through the permutation group
/// generated by the given automorphisms, times a cyclic group of order
/// trivial_order acting trivially.
inline AlgGroupModel finite_model(int p, const FgAbelian& x, const std::vector<LatticeHom>& autos, int trivial_order,
                                  std::size_t cap = 128) {
  const auto elems = x.elements();
  std::map<ZVector, int> idx;
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const auto& a : autos) {
    Perm pm(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) pm[i] = idx.at(a(elems[i]));
    gens.push_back(pm);
  }
  if (gens.empty()) {
    Perm id(elems.size());
    std::iota(id.begin(), id.end(), 0);
    gens.push_back(id);
  }
  FiniteGroup perm = FiniteGroup::from_permutations(gens, cap);
  auto matrix_of = [&](int e) {
    const std::size_t n = x.ngens();
    ZMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& img = elems[perm.perm(e)[idx.at(x.basis_vector(j))]];
      for (std::size_t i = 0; i < n; ++i) m(i, j) = img[i];
    }
    return LatticeHom(x, x, m);
  };
  AlgGroupModel g;
  g.characteristic = p;
  g.X = x;
  g.F = trivial_order > 1 ? FiniteGroup::direct_product(perm, FiniteGroup::cyclic(trivial_order), cap) : perm;
  for (int e = 0; e < g.F.order(); ++e) g.action_x.push_back(matrix_of(e % perm.order()));
  g.action_l.assign(g.F.order(), QMatrix(0, 0));
  return g;
}

inline AlgGroupModel random_bridgeable(std::mt19937_64& rng, int max_order = 128) {
  const auto lattices = small_finite_lattices();
  while (true) {
    const FgAbelian& x = lattices[rng() % lattices.size()];
    std::vector<LatticeHom> autos;
    const int k = static_cast<int>(rng() % 3);
    for (int tries = 0; static_cast<int>(autos.size()) < k && tries < 50; ++tries)
      if (auto a = random_automorphism(rng, x)) autos.push_back(*a);
    const int trivial_order = 1 + static_cast<int>(rng() % 3);
    AlgGroupModel g;
    try {
      g = finite_model(0, x, autos, trivial_order, static_cast<std::size_t>(max_order));
    } catch (const CapExceeded&) {
      continue;
    }
    const long long order = static_cast<long long>(*x.order()) * g.F.order();
    if (order > max_order || g.F.order() > 16) continue;
    for (int p : {0, 0, 5, 7, 11}) {
      if (p != 0 && order % p == 0) continue;
      if (rng() % 2 == 0 || p == 11) {
        g.characteristic = p;
        break;
      }
    }
    return g;
  }
}

// ---------------------------------------------------------------------------
// Random finite groups

inline FiniteGroup quaternion8() {
  // +-1, +-i, +-j, +-k as sign*4 + unit, unit 0..3 = 1, i, j, k
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
      t[a][b] = s * 4 + unit[a % 4][b % 4];
    }
  return FiniteGroup(t);
}

inline FiniteGroup random_finite_group(std::mt19937_64& rng, int max_order = 64) {
  while (true) {
    FiniteGroup g;
    try {
      switch (rng() % 7) {
        case 0: g = FiniteGroup::cyclic(1 + static_cast<int>(rng() % 24)); break;
        case 1: g = FiniteGroup::dihedral(2 + static_cast<int>(rng() % 16)); break;
        case 2: g = FiniteGroup::symmetric(3 + static_cast<int>(rng() % 2)); break;
        case 3: g = quaternion8(); break;
        case 4: {
          FiniteGroup a = rng() % 2 ? FiniteGroup::symmetric(3) : FiniteGroup::dihedral(2 + static_cast<int>(rng() % 4));
          g = FiniteGroup::direct_product(a, FiniteGroup::cyclic(2 + static_cast<int>(rng() % 3)));
          break;
        }
        case 5: {
          const int m = 3 + static_cast<int>(rng() % 4);
          std::vector<Perm> gens;
          for (int k = 0; k < 2; ++k) {
            Perm pm(m);
            std::iota(pm.begin(), pm.end(), 0);
            std::shuffle(pm.begin(), pm.end(), rng);
            gens.push_back(pm);
          }
          g = FiniteGroup::from_permutations(gens, static_cast<std::size_t>(max_order));
          break;
        }
        default: g = to_finite(random_bridgeable(rng, max_order)).group; break;
      }
    } catch (const CapExceeded&) {
      continue;
    }
    if (g.order() <= max_order) return g;
  }
}

}  // namespace gen
}  // namespace hyperc
