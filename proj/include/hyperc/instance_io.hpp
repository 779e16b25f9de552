#pragma once

// JSON instance files and reports.
//
// Instance:
//   { "name": str?, "char": int, "lattice": {"rank": int, "torsion": [int]},
//     "finite": {"elements": [name], "table": [[name]]} | {"permutations": [[int]]},
//     "action_on_lattice": {generator: int matrix},
//     "lie": {"dim": int, "brackets": [[i, j, k, c]], "weights": [[int]], "action": {generator: rational matrix}},
//     "faithful_dim": int? }
// Integers may be JSON numbers or decimal strings; rationals may also be "p/q".
// With "permutations" the generators are named g1, g2, ... and the identity e.

#include "hyperc/agmodel.hpp"

#include <nlohmann/json.hpp>

namespace hyperc {

using json = nlohmann::json;

struct ParseError : std::invalid_argument {
  ParseError(const std::string& path, const std::string& what)
      : std::invalid_argument(path + ": " + what), path(path) {}
  std::string path;
};

struct ParsedInstance {
  std::string name;
  AlgGroupModel model;
  std::optional<int> faithful_dim;
};

namespace io {

inline json integer_to_json(const Integer& a) {
  if (fits_int64(a)) return static_cast<std::int64_t>(a);
  return a.str();
}

inline json rational_to_json(const Rational& q) {
  if (is_integral(q)) return integer_to_json(numerator(q));
  return to_string(q);
}

inline const json& at(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, "missing key '" + key + "'");
  return *it;
}

inline Integer integer_of(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos) return Integer(s);
    } catch (const std::exception&) {
    }
    throw ParseError(path, "malformed integer '" + s + "'");
  }
  throw ParseError(path, "expected an integer");
}

inline int small_int(const json& j, const std::string& path, int lo = 0, int hi = 1 << 20) {
  const Integer a = integer_of(j, path);
  if (a < lo || a > hi) throw ParseError(path, "value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(a);
}

inline Rational rational_of(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path, "expected a rational (integer or \"p/q\" string)");
}

inline const json& array_at(const json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  if (size && j.size() != *size)
    throw ParseError(path, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
  return j;
}

template <class T, class F>
Matrix<T> matrix_of(const json& j, const std::string& path, std::size_t rows, std::size_t cols, F entry) {
  array_at(j, path, rows);
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    array_at(j[r], rp, cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline ZVector zvector_of(const json& j, const std::string& path, std::size_t n) {
  array_at(j, path, n);
  ZVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = integer_of(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

inline json zvector_to_json(const ZVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

inline FiniteGroup finite_of(const json& j, const std::string& path, std::map<std::string, int>& generators) {
  if (j.contains("permutations")) {
    const std::string pp = path + ".permutations";
    const json& perms = array_at(j["permutations"], pp);
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const std::string ip = pp + "[" + std::to_string(i) + "]";
      array_at(perms[i], ip);
      Perm p;
      for (std::size_t k = 0; k < perms[i].size(); ++k)
        p.push_back(small_int(perms[i][k], ip + "[" + std::to_string(k) + "]", 0, 1 << 16));
      gens.push_back(std::move(p));
    }
    FiniteGroup f;
    try {
      f = FiniteGroup::from_permutations(gens);
    } catch (const std::exception& e) {
      throw ParseError(pp, e.what());
    }
    std::vector<std::string> names(f.order());
    for (int a = 0; a < f.order(); ++a) names[a] = a == f.identity() ? "e" : "p" + std::to_string(a);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Perm full = gens[i];
      const std::size_t m = f.perm(f.identity()).size();
      for (std::size_t k = full.size(); k < m; ++k) full.push_back(static_cast<int>(k));
      for (int a = 0; a < f.order(); ++a)
        if (f.perm(a) == full) {
          const std::string name = "g" + std::to_string(i + 1);
          generators[name] = a;
          if (a != f.identity() && names[a][0] == 'p') names[a] = name;
        }
    }
    f.set_names(names);
    return f;
  }
  const json& elems = array_at(at(j, "elements", path), path + ".elements");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::string ep = path + ".elements[" + std::to_string(i) + "]";
    if (!elems[i].is_string()) throw ParseError(ep, "expected a name");
    const auto name = elems[i].get<std::string>();
    if (!index.emplace(name, static_cast<int>(i)).second) throw ParseError(ep, "duplicate element name '" + name + "'");
    names.push_back(name);
  }
  const std::size_t n = names.size();
  const std::string tp = path + ".table";
  const json& tab = array_at(at(j, "table", path), tp, n);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    const std::string rp = tp + "[" + std::to_string(a) + "]";
    array_at(tab[a], rp, n);
    for (std::size_t b = 0; b < n; ++b) {
      const std::string cp = rp + "[" + std::to_string(b) + "]";
      if (!tab[a][b].is_string() || !index.count(tab[a][b].get<std::string>()))
        throw ParseError(cp, "expected one of the element names");
      table[a][b] = index.at(tab[a][b].get<std::string>());
    }
  }
  FiniteGroup f;
  try {
    f = FiniteGroup(table, names);
  } catch (const std::exception& e) {
    throw ParseError(tp, e.what());
  }
  generators = index;
  return f;
}

inline int element_named(const std::map<std::string, int>& generators, const std::string& name, const std::string& path) {
  auto it = generators.find(name);
  if (it == generators.end()) throw ParseError(path, "unknown group element '" + name + "'");
  return it->second;
}

}  // namespace io

inline ParsedInstance parse_instance(const json& j) {
  using namespace io;
  ParsedInstance out;
  if (!j.is_object()) throw ParseError("$", "expected an object");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name", "expected a string");
    out.name = j["name"].get<std::string>();
  }
  if (j.contains("faithful_dim")) out.faithful_dim = small_int(j["faithful_dim"], "faithful_dim", 1, 64);
  AlgGroupModel& g = out.model;
  g.characteristic = small_int(at(j, "char", "$"), "char", 0, 1 << 20);
  if (g.characteristic != 0 && !is_prime(g.characteristic)) throw ParseError("char", "must be 0 or a prime");

  const json& lat = at(j, "lattice", "$");
  const std::size_t rank = small_int(at(lat, "rank", "lattice"), "lattice.rank", 0, 64);
  std::vector<Integer> torsion;
  if (lat.contains("torsion")) {
    const json& t = array_at(lat["torsion"], "lattice.torsion");
    for (std::size_t i = 0; i < t.size(); ++i) torsion.push_back(integer_of(t[i], "lattice.torsion[" + std::to_string(i) + "]"));
  }
  try {
    g.X = FgAbelian(rank, torsion);
  } catch (const std::exception& e) {
    throw ParseError("lattice.torsion", e.what());
  }
  const std::size_t nx = g.X.ngens();

  std::map<std::string, int> generators;
  if (j.contains("finite")) {
    g.F = finite_of(j["finite"], "finite", generators);
  } else {
    g.F = FiniteGroup::cyclic(1);
    g.F.set_names({"e"});
  }

  // action on X: listed generators extended multiplicatively
  std::vector<std::pair<int, LatticeHom>> ax;
  if (j.contains("action_on_lattice")) {
    const json& a = j["action_on_lattice"];
    if (!a.is_object()) throw ParseError("action_on_lattice", "expected an object keyed by group element");
    for (auto it = a.begin(); it != a.end(); ++it) {
      const std::string p = "action_on_lattice." + it.key();
      const int e = element_named(generators, it.key(), p);
      const ZMatrix m = matrix_of<Integer>(it.value(), p, nx, nx, integer_of);
      try {
        ax.emplace_back(e, LatticeHom(g.X, g.X, m));
      } catch (const std::exception& ex) {
        throw ParseError(p, ex.what());
      }
    }
  }
  if (ax.empty())
    for (int f : generating_set(g.F)) ax.emplace_back(f, LatticeHom::identity(g.X));
  try {
    g.action_x = extend_action_x(g.F, g.X, ax);
  } catch (const std::exception& e) {
    throw ParseError("action_on_lattice", e.what());
  }

  std::size_t dim = 0;
  std::vector<std::pair<int, QMatrix>> al;
  if (j.contains("lie")) {
    const json& l = j["lie"];
    dim = small_int(at(l, "dim", "lie"), "lie.dim", 0, 64);
    std::vector<BracketTerm> terms;
    if (l.contains("brackets")) {
      const json& br = array_at(l["brackets"], "lie.brackets");
      for (std::size_t b = 0; b < br.size(); ++b) {
        const std::string bp = "lie.brackets[" + std::to_string(b) + "]";
        array_at(br[b], bp, 4);
        BracketTerm t;
        t.i = small_int(br[b][0], bp + "[0]", 0, static_cast<int>(dim) - 1);
        t.j = small_int(br[b][1], bp + "[1]", 0, static_cast<int>(dim) - 1);
        t.k = small_int(br[b][2], bp + "[2]", 0, static_cast<int>(dim) - 1);
        t.c = rational_of(br[b][3], bp + "[3]");
        terms.push_back(t);
      }
    }
    std::vector<ZVector> weights(dim, ZVector(nx, Integer(0)));
    if (l.contains("weights")) {
      const json& w = array_at(l["weights"], "lie.weights", dim);
      for (std::size_t i = 0; i < dim; ++i) weights[i] = g.X.reduce(zvector_of(w[i], "lie.weights[" + std::to_string(i) + "]", nx));
    }
    g.L = GradedNilLie::from_terms(dim, terms, weights);
    if (l.contains("action")) {
      const json& a = l["action"];
      if (!a.is_object()) throw ParseError("lie.action", "expected an object keyed by group element");
      for (auto it = a.begin(); it != a.end(); ++it) {
        const std::string p = "lie.action." + it.key();
        al.emplace_back(element_named(generators, it.key(), p), matrix_of<Rational>(it.value(), p, dim, dim, rational_of));
      }
    }
  } else {
    g.L = GradedNilLie(0);
  }
  if (al.empty())
    for (int f : generating_set(g.F)) al.emplace_back(f, QMatrix::identity(dim));
  try {
    g.action_l = extend_action_l(g.F, dim, al);
  } catch (const std::exception& e) {
    throw ParseError("lie.action", e.what());
  }

  const auto problems = validate(g);
  if (!problems.empty()) throw ParseError("$", "invalid model: " + problems.front());
  return out;
}

inline ParsedInstance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return parse_instance(j);
}

/// Writes a model in the instance schema, with the group as a named table
/// and the action listed on a generating set.
inline json emit_instance(const AlgGroupModel& g, const std::string& name = {}, std::optional<int> faithful_dim = {}) {
  using namespace io;
  json j;
  if (!name.empty()) j["name"] = name;
  j["char"] = g.characteristic;
  j["lattice"] = {{"rank", g.X.rank()}, {"torsion", zvector_to_json(g.X.torsion())}};
  std::vector<std::string> names(g.F.order());
  for (int a = 0; a < g.F.order(); ++a) names[a] = g.F.name(a);
  json table = json::array();
  for (int a = 0; a < g.F.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.F.order(); ++b) row.push_back(names[g.F.mul(a, b)]);
    table.push_back(row);
  }
  j["finite"] = {{"elements", names}, {"table", table}};
  json ax = json::object(), al = json::object();
  for (int f : generating_set(g.F)) {
    json m = json::array();
    for (std::size_t r = 0; r < g.X.ngens(); ++r) m.push_back(zvector_to_json(g.action_x[f].matrix().row_vec(r)));
    ax[names[f]] = m;
    json q = json::array();
    for (std::size_t r = 0; r < g.L.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.L.dim(); ++c) row.push_back(rational_to_json(g.action_l[f](r, c)));
      q.push_back(row);
    }
    al[names[f]] = q;
  }
  j["action_on_lattice"] = ax;
  if (g.L.dim() > 0) {
    json br = json::array();
    for (std::size_t a = 0; a < g.L.dim(); ++a)
      for (std::size_t b = a + 1; b < g.L.dim(); ++b)
        for (std::size_t k = 0; k < g.L.dim(); ++k)
          if (g.L.bracket(a, b)[k] != 0) br.push_back({a, b, k, rational_to_json(g.L.bracket(a, b)[k])});
    json w = json::array();
    for (const auto& v : g.L.weights()) w.push_back(zvector_to_json(v));
    j["lie"] = {{"dim", g.L.dim()}, {"brackets", br}, {"weights", w}, {"action", al}};
  }
  if (faithful_dim) j["faithful_dim"] = *faithful_dim;
  return j;
}

// ---------------------------------------------------------------------------
// Reports

inline json encode(const AlgGroupModel& g, const StdSubgroup& s) {
  using namespace io;
  json m = json::array();
  for (std::size_t r = 0; r < s.M.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < s.M.cols(); ++c) row.push_back(rational_to_json(s.M(r, c)));
    m.push_back(row);
  }
  json y = json::array();
  for (const auto& v : s.Y.generators()) y.push_back(zvector_to_json(v));
  json k = json::array();
  for (int e : s.K.elements) k.push_back(g.F.name(e));
  json out = {{"M", m}, {"Y", y}, {"K", k}, {"quotient_X", quotient(s.Y).group.str()}};
  if (auto o = order(s)) out["order"] = integer_to_json(*o);
  return out;
}

inline StdSubgroup decode_subgroup(const AlgGroupModel& g, const json& j, const std::string& path = "subgroup") {
  using namespace io;
  const json& m = array_at(at(j, "M", path), path + ".M");
  QMatrix mm = matrix_of<Rational>(m, path + ".M", m.size(), g.L.dim(), rational_of);
  const json& y = array_at(at(j, "Y", path), path + ".Y");
  std::vector<ZVector> gens;
  for (std::size_t i = 0; i < y.size(); ++i) gens.push_back(zvector_of(y[i], path + ".Y[" + std::to_string(i) + "]", g.X.ngens()));
  const json& k = array_at(at(j, "K", path), path + ".K");
  FiniteSubgroup kk;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const std::string kp = path + ".K[" + std::to_string(i) + "]";
    if (!k[i].is_string()) throw ParseError(kp, "expected an element name");
    auto e = g.F.find(k[i].get<std::string>());
    if (!e) throw ParseError(kp, "unknown group element");
    kk.elements.push_back(*e);
  }
  std::sort(kk.elements.begin(), kk.elements.end());
  return make_std(mm.rows() ? mm : QMatrix(0, g.L.dim()), Subgroup(g.X, gens), kk);
}

inline json encode(const AlgGroupModel& g, const CentralSeriesReport& rep) {
  json stages = json::array();
  for (const auto& s : rep.stages) {
    json st = {{"ordinal", s.ordinal.str()}, {"subgroup", encode(g, s.subgroup)}};
    if (s.certificate) {
      json cert = {{"kind", to_string(s.certificate->kind)}, {"depth", s.certificate->depth}};
      if (!s.certificate->note.empty()) cert["note"] = s.certificate->note;
      st["certificate"] = cert;
    }
    stages.push_back(st);
  }
  json out = {{"stages", stages}, {"terminal", rep.terminal.str()}, {"limit_stages", rep.limit_stages}};
  if (!rep.message.empty()) out["message"] = rep.message;
  return out;
}

struct Report {
  std::string operation;
  std::string status;  ///< "ok" or an error class
  json result;
  double timing_ms = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

inline json to_json(const Report& r) {
  return {{"operation", r.operation}, {"status", r.status}, {"result", r.result}, {"timing_ms", r.timing_ms}};
}

inline std::string emit(const Report& r) { return to_json(r).dump(2); }

inline Report parse_report(const std::string& text) {
  using namespace io;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  Report r;
  const json& op = at(j, "operation", "$");
  const json& st = at(j, "status", "$");
  const json& tm = at(j, "timing_ms", "$");
  if (!op.is_string()) throw ParseError("operation", "expected a string");
  if (!st.is_string()) throw ParseError("status", "expected a string");
  if (!tm.is_number()) throw ParseError("timing_ms", "expected a number");
  r.operation = op.get<std::string>();
  r.status = st.get<std::string>();
  r.result = at(j, "result", "$");
  r.timing_ms = tm.get<double>();
  return r;
}

}  // namespace hyperc
