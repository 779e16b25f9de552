#pragma once

// Finite groups given by Cayley tables. Everything here is brute force over
// the elements, which is the point: these routines are the reference the
// algebraic-group side is compared against.

#include "hyperc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyperc {

using Perm = std::vector<int>;

class FiniteGroup {
 public:
  static constexpr std::size_t default_cap = 2048;

  FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}

  /// table[a][b] = index of a*b. Validated: Latin square with identity and
  /// associative (Light's test on a generating set).
  explicit FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> names = {},
                       std::size_t cap = default_cap)
      : n_(static_cast<int>(table.size())), names_(std::move(names)) {
    if (table.empty()) throw InvalidGroup("group must have at least one element");
    if (table.size() > cap) throw CapExceeded("group order " + std::to_string(table.size()) + " exceeds cap " + std::to_string(cap));
    if (!names_.empty() && names_.size() != table.size()) throw InvalidGroup("one name per element is required");
    table_.resize(static_cast<std::size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a) {
      if (static_cast<int>(table[a].size()) != n_) throw InvalidGroup("Cayley table is not square");
      for (int b = 0; b < n_; ++b) {
        const int v = table[a][b];
        if (v < 0 || v >= n_) throw InvalidGroup("Cayley table entry out of range");
        table_[a * n_ + b] = v;
      }
    }
    validate();
  }

  /// The group generated by permutations of {0..m-1}. Elements are ordered
  /// by discovery, identity first; perm(g) returns the permutation of g.
  static FiniteGroup from_permutations(const std::vector<Perm>& gens, std::size_t cap = default_cap) {
    std::size_t m = 0;
    for (const auto& g : gens) m = std::max(m, g.size());
    Perm id(m);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> gs;
    for (auto g : gens) {
      if (g.size() != m) {
        const std::size_t old = g.size();
        g.resize(m);
        for (std::size_t i = old; i < m; ++i) g[i] = static_cast<int>(i);
      }
      std::vector<bool> seen(m, false);
      for (int v : g) {
        if (v < 0 || static_cast<std::size_t>(v) >= m || seen[v]) throw InvalidGroup("generator is not a permutation");
        seen[v] = true;
      }
      gs.push_back(std::move(g));
    }
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k)
      for (const auto& g : gs) {
        Perm p = compose_perm(g, elems[k]);
        if (!index.count(p)) {
          if (elems.size() >= cap) throw CapExceeded("generated permutation group exceeds cap " + std::to_string(cap));
          index.emplace(p, static_cast<int>(elems.size()));
          elems.push_back(std::move(p));
        }
      }
    std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose_perm(elems[a], elems[b]));
    FiniteGroup g(table, {}, cap);
    g.perms_ = std::move(elems);
    return g;
  }

  static FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(t);
  }
  /// Dihedral group of order 2n: r^a s^e stored as a + n*e.
  static FiniteGroup dihedral(int n) {
    const int size = 2 * n;
    std::vector<std::vector<int>> t(size, std::vector<int>(size));
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        const int a = x % n, e = x / n, b = y % n, f = y / n;
        // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e+f)
        const int rot = ((a + (e ? -b : b)) % n + n) % n;
        t[x][y] = rot + n * ((e + f) % 2);
      }
    return FiniteGroup(t);
  }
  static FiniteGroup symmetric(int m) {
    if (m <= 1) return FiniteGroup();
    Perm swap(m), cycle(m);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < m; ++i) cycle[i] = (i + 1) % m;
    return from_permutations({swap, cycle});
  }
  /// (a1, b1)(a2, b2) = (a1 a2, b1 b2), stored as a + |A| b.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap = default_cap) {
    const int na = a.order(), nb = b.order();
    std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
      for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
    return FiniteGroup(t, {}, cap);
  }

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int power(int a, long long k) const {
    int r = identity_;
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }
  bool is_abelian() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  const std::vector<std::string>& names() const { return names_; }
  std::string name(int a) const { return names_.empty() ? std::to_string(a) : names_[a]; }
  std::optional<int> find(const std::string& name) const {
    for (int a = 0; a < n_; ++a)
      if (this->name(a) == name) return a;
    return std::nullopt;
  }
  bool has_permutations() const { return !perms_.empty(); }
  const Perm& perm(int a) const { return perms_.at(a); }
  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
  }
  void set_names(std::vector<std::string> names) {
    if (!names.empty() && static_cast<int>(names.size()) != n_) throw InvalidGroup("one name per element is required");
    names_ = std::move(names);
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  static Perm compose_perm(const Perm& f, const Perm& g) {  // f after g
    Perm out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
    return out;
  }

  void validate() {
    for (int a = 0; a < n_; ++a) {
      std::vector<bool> row(n_, false), col(n_, false);
      for (int b = 0; b < n_; ++b) {
        if (row[mul(a, b)] || col[mul(b, a)]) throw InvalidGroup("Cayley table is not a Latin square");
        row[mul(a, b)] = col[mul(b, a)] = true;
      }
    }
    identity_ = -1;
    for (int e = 0; e < n_ && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw InvalidGroup("no identity element");
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == identity_) inverse_[a] = b;
    // Light's test: the elements g with (xg)y = x(gy) for all x, y form a
    // closed set, so checking a generating set suffices.
    std::vector<bool> reached(n_, false);
    reached[identity_] = true;
    std::vector<int> gens;
    for (int g = 0; g < n_; ++g) {
      if (reached[g]) continue;
      gens.push_back(g);
      std::vector<int> frontier;
      for (int a = 0; a < n_; ++a)
        if (reached[a]) frontier.push_back(a);
      for (std::size_t k = 0; k < frontier.size(); ++k)
        for (int s : gens) {
          for (int c : {mul(frontier[k], s), mul(s, frontier[k])})
            if (!reached[c]) {
              reached[c] = true;
              frontier.push_back(c);
            }
        }
    }
    for (int g : gens)
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          if (mul(mul(x, g), y) != mul(x, mul(g, y))) throw InvalidGroup("operation is not associative");
  }

  int n_ = 1;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::vector<Perm> perms_;
};

/// A subgroup as its sorted element list.
struct FiniteSubgroup {
  std::vector<int> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }
  bool contains(const FiniteSubgroup& h) const {
    return std::includes(elements.begin(), elements.end(), h.elements.begin(), h.elements.end());
  }
  friend bool operator==(const FiniteSubgroup&, const FiniteSubgroup&) = default;
  friend auto operator<=>(const FiniteSubgroup&, const FiniteSubgroup&) = default;
};

inline FiniteSubgroup whole(const FiniteGroup& g) {
  FiniteSubgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}
inline FiniteSubgroup trivial_subgroup(const FiniteGroup& g) { return {{g.identity()}}; }

/// Closure of a set under the group operation.
inline FiniteSubgroup generated(const FiniteGroup& g, const std::vector<int>& set) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = true;
  std::vector<int> gens;
  for (int s : set)
    if (s != g.identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (int s : gens) {
      const int c = g.mul(elems[k], s);
      if (!in[c]) {
        in[c] = true;
        elems.push_back(c);
      }
    }
  std::sort(elems.begin(), elems.end());
  return {elems};
}

inline FiniteSubgroup join(const FiniteGroup& g, const FiniteSubgroup& a, const FiniteSubgroup& b) {
  std::vector<int> s = a.elements;
  s.insert(s.end(), b.elements.begin(), b.elements.end());
  return generated(g, s);
}

inline FiniteSubgroup meet(const FiniteSubgroup& a, const FiniteSubgroup& b) {
  FiniteSubgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<bool> in(g.order(), false);
  for (int e : elems) in[e] = true;
  if (!in[g.identity()]) return false;
  for (int a : elems)
    for (int b : elems)
      if (!in[g.mul(a, g.inv(b))]) return false;
  return true;
}

inline FiniteSubgroup centralizer(const FiniteGroup& g, const FiniteSubgroup& s) {
  FiniteSubgroup out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : s.elements)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.elements.push_back(x);
  }
  return out;
}

inline FiniteSubgroup center(const FiniteGroup& g) { return centralizer(g, whole(g)); }

inline bool is_normal(const FiniteGroup& g, const FiniteSubgroup& s) {
  for (int x = 0; x < g.order(); ++x)
    for (int y : s.elements)
      if (!s.contains(g.conj(x, y))) return false;
  return true;
}

inline FiniteSubgroup normal_closure(const FiniteGroup& g, const std::vector<int>& set) {
  std::vector<int> conjugates;
  for (int y : set)
    for (int x = 0; x < g.order(); ++x) conjugates.push_back(g.conj(x, y));
  return generated(g, conjugates);
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<int>> out;
  for (int y = 0; y < g.order(); ++y) {
    if (seen[y]) continue;
    std::vector<int> cls;
    for (int x = 0; x < g.order(); ++x) {
      const int c = g.conj(x, y);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

/// All normal subgroups, by closing unions of conjugacy classes: every normal
/// subgroup is reached from 1 by adjoining the classes it contains one at a
/// time. Sorted by size, then elements.
inline std::vector<FiniteSubgroup> normal_subgroups(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  std::set<FiniteSubgroup> found{trivial_subgroup(g)};
  std::vector<FiniteSubgroup> queue{trivial_subgroup(g)};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const FiniteSubgroup n = queue[k];
    for (const auto& cls : classes) {
      if (n.contains(cls.front())) continue;
      std::vector<int> s = n.elements;
      s.insert(s.end(), cls.begin(), cls.end());
      auto m = generated(g, s);
      if (found.insert(m).second) queue.push_back(m);
    }
  }
  std::vector<FiniteSubgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

struct FiniteQuotient {
  FiniteGroup group;
  std::vector<int> projection;       ///< element of G -> coset index
  std::vector<int> representatives;  ///< coset index -> smallest element
};

/// G/N with cosets numbered by their smallest element.
inline FiniteQuotient quotient(const FiniteGroup& g, const FiniteSubgroup& n) {
  if (!is_subgroup(g, n.elements) || !is_normal(g, n))
    throw PreconditionViolated("quotient requires a normal subgroup");
  FiniteQuotient q;
  q.projection.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (q.projection[x] >= 0) continue;
    const int idx = static_cast<int>(q.representatives.size());
    q.representatives.push_back(x);
    for (int y : n.elements) q.projection[g.mul(x, y)] = idx;
  }
  const std::size_t m = q.representatives.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      t[a][b] = q.projection[g.mul(q.representatives[a], q.representatives[b])];
  std::vector<std::string> names;
  if (!g.names().empty())
    for (int r : q.representatives) names.push_back(g.name(r));
  q.group = FiniteGroup(t, names);
  return q;
}

inline FiniteSubgroup preimage(const FiniteQuotient& q, const FiniteSubgroup& s) {
  FiniteSubgroup out;
  for (std::size_t x = 0; x < q.projection.size(); ++x)
    if (s.contains(q.projection[x])) out.elements.push_back(static_cast<int>(x));
  return out;
}

inline FiniteSubgroup image(const FiniteQuotient& q, const FiniteSubgroup& s) {
  std::set<int> img;
  for (int x : s.elements) img.insert(q.projection[x]);
  return {{img.begin(), img.end()}};
}

/// A subgroup as a group in its own right; element k is s.elements[k].
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> embedding;
};

inline SubgroupAsGroup as_group(const FiniteGroup& g, const FiniteSubgroup& s) {
  const std::size_t m = s.size();
  std::map<int, int> local;
  for (std::size_t k = 0; k < m; ++k) local[s.elements[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = local.at(g.mul(s.elements[a], s.elements[b]));
  std::vector<std::string> names;
  if (!g.names().empty())
    for (int e : s.elements) names.push_back(g.name(e));
  return {FiniteGroup(t, names), s.elements};
}

/// Upper central series 1 = Z_0 < Z_1 < ... up to the first repeat (which is
/// not duplicated). Z_{i+1} = {g : [g, x] in Z_i for all x}.
inline std::vector<FiniteSubgroup> ucs(const FiniteGroup& g) {
  std::vector<FiniteSubgroup> out{trivial_subgroup(g)};
  while (true) {
    const auto& z = out.back();
    FiniteSubgroup next;
    for (int a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (int x = 0; x < g.order() && ok; ++x) ok = z.contains(g.commutator(a, x));
      if (ok) next.elements.push_back(a);
    }
    if (next == z) break;
    out.push_back(std::move(next));
  }
  return out;
}

inline FiniteSubgroup hypercenter(const FiniteGroup& g) { return ucs(g).back(); }

/// Nilpotency class, or nullopt when the group is not nilpotent.
inline std::optional<int> nilpotency_class(const FiniteGroup& g) {
  auto series = ucs(g);
  if (series.back().size() != static_cast<std::size_t>(g.order())) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}
inline bool is_nilpotent(const FiniteGroup& g) { return nilpotency_class(g).has_value(); }

inline bool is_nilpotent_subgroup(const FiniteGroup& g, const FiniteSubgroup& s) {
  return is_nilpotent(as_group(g, s).group);
}

/// Join of all nilpotent normal subgroups, checked nilpotent.
inline FiniteSubgroup fitting(const FiniteGroup& g) {
  FiniteSubgroup f = trivial_subgroup(g);
  for (const auto& n : normal_subgroups(g))
    if (!f.contains(n) && is_nilpotent_subgroup(g, n)) f = join(g, f, n);
  if (!is_nilpotent_subgroup(g, f)) throw std::logic_error("join of nilpotent normal subgroups is not nilpotent");
  return f;
}

/// Intersection of the normal subgroups N with centerless G/N.
inline FiniteSubgroup hypercenter_by_intersection(const FiniteGroup& g) {
  FiniteSubgroup out = whole(g);
  for (const auto& n : normal_subgroups(g)) {
    if (out.contains(n) && n.size() == out.size()) continue;
    auto q = quotient(g, n);
    if (center(q.group).size() == 1) out = meet(out, n);
  }
  return out;
}

inline std::vector<int> prime_factors(long long n) {
  std::vector<int> out;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

/// True when |s| is a power of p (the trivial group counts).
inline bool is_p_group(std::size_t order, int p) {
  if (p <= 1) return order == 1;
  while (order % p == 0) order /= p;
  return order == 1;
}

/// Elements of order prime to p in an abelian subgroup; with p = 0 all of s.
inline FiniteSubgroup p_prime_part(const FiniteGroup& g, const FiniteSubgroup& s, int p) {
  if (p == 0) return s;
  FiniteSubgroup out;
  for (int x : s.elements)
    if (g.element_order(x) % p != 0) out.elements.push_back(x);
  return out;
}

}  // namespace hyperc
