// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include "hyperc/hyperc.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hyperc;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

ParsedInstance fixture(const std::string& name) {
  std::ifstream in(std::string(HYPERC_FIXTURE_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return parse_instance_text(s.str());
}

void require_suite(Line& line, const std::string& suite, std::uint64_t seed, int count) {
  const auto results = run_suite(suite, seed, count);
  const auto sum = summarize(results);
  std::string first;
  for (const auto& r : results)
    if (r.verdict != Verdict::Pass && first.empty()) first = r.check + " on " + r.instance + ": " + r.detail;
  line.require(sum.fail == 0 && sum.skip == 0,
               suite + ": " + std::to_string(sum.fail) + " failed, " + std::to_string(sum.skip) + " skipped; " + first);
}

int report(int n, const std::string& title, Line line, double seconds, double limit) {
  if (limit > 0) line.require(seconds < limit, "runtime " + std::to_string(seconds) + " s over " + std::to_string(limit) + " s");
  std::printf("criterion %d [%s] %s (%.3f s%s)%s%s\n", n, line.ok ? "PASS" : "FAIL", title.c_str(), seconds,
              limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + " s").c_str() : "",
              line.ok ? "" : ": ", line.note.c_str());
  return line.ok ? 0 : 1;
}

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Subgroup two_power(int i) { return Subgroup(FgAbelian::free(1), {{Integer(1) << i}}); }

Line criterion1() {
  Line line;
  const AlgGroupModel g = fixture("example1.json").model;
  line.require(g.characteristic == 3, "fixture is not in characteristic 3");
  const auto rep = ucs(g);
  for (int i = 1; i <= 10; ++i) {
    auto zi = rep.term({0, i});
    line.require(zi && zi->M.rows() == 0 && zi->Y == two_power(i) && zi->K.size() == 1,
                 "Z_" + std::to_string(i) + " is not mu_2^" + std::to_string(i));
  }
  const SeriesStage* omega = nullptr;
  for (const auto& s : rep.stages)
    if (s.ordinal == OrdinalIndex{1, 0}) omega = &s;
  line.require(omega && omega->subgroup.Y.is_trivial() && omega->subgroup.K.size() == 1, "Z_omega is not G_m");
  line.require(omega && omega->certificate && omega->certificate->kind == LimitKind::UnitFactorSplit,
               "Z_omega lacks a UnitFactorSplit certificate");
  line.require(rep.status == SeriesStatus::Terminated && rep.terminal.str() == "omega*1+1",
               "terminal ordinal " + rep.terminal.str());
  line.require(!nilpotency_class(g), "G reported nilpotent");
  if (omega) {
    const auto q = quotient(g, omega->subgroup);
    const auto w = z_omega(q.model);
    line.require(order(w) == Integer(2), "Z_omega(G/Z_omega) does not have order 2");
    line.require(!is_unipotent_subgroup(q.model, w), "Z_omega(G/Z_omega) unipotent at p = 3");
  }
  const AlgGroupModel g2 = fixture("example1_char2.json").model;
  const auto q2 = quotient(g2, z_omega(g2));
  const auto w2 = z_omega(q2.model);
  line.require(g2.characteristic == 2 && order(w2) == Integer(2) && is_unipotent_subgroup(q2.model, w2),
               "Z_omega(G/Z_omega) not unipotent at p = 2");
  return line;
}

Line criterion2() {
  Line line;
  std::mt19937_64 rng(7);
  int n = 0;
  for (int i = 0; i < 25; ++i) {
    const auto g = gen::random_connected(rng);
    line.require(g.X.rank() <= 3 && g.L.dim() <= 4 && is_connected(g), "model outside the caps");
    const auto rep = ucs(g);
    if (rep.status != SeriesStatus::Terminated) {
      line.require(false, "model " + std::to_string(i) + ": " + to_string(rep.status));
      continue;
    }
    const auto h = rep.last().subgroup;
    const auto q = quotient(g, h);
    line.require(is_trivial(q.model, center(q.model)), "model " + std::to_string(i) + ": Z(G/Z_inf) nontrivial");
    line.require(nilpotency_class_sub(g, h).has_value(), "model " + std::to_string(i) + ": Z_inf not nilpotent");
    ++n;
  }
  line.require(n >= 25, "fewer than 25 models");
  require_suite(line, "connected-main", 7, 25);
  return line;
}

Line criterion3() {
  Line line;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = gen::random_bridgeable(rng, 128);
    const auto b = to_finite(g);
    const std::string id = "model " + std::to_string(i);
    line.require(b.group.order() <= 128, id + ": order over 128");
    const auto& fg = b.group;
    line.require(b.to_finite(center(g)) == center(fg), id + ": center");
    line.require(b.to_finite(hypercenter(g).subgroup) == hypercenter(fg), id + ": hypercenter");
    line.require(b.to_finite(fitting(g)) == fitting(fg), id + ": fitting");
    const auto rep = ucs(g);
    const auto fin = ucs(fg);
    bool same = rep.stages.size() == fin.size();
    for (std::size_t k = 0; same && k < fin.size(); ++k) same = b.to_finite(rep.stages[k].subgroup) == fin[k];
    line.require(same, id + ": ucs");
    const auto f = fitting(fg);
    for (const auto& n : normal_subgroups(fg))
      if (is_nilpotent_subgroup(fg, n)) line.require(f.contains(n), id + ": nilpotent normal outside fitting");
  }
  require_suite(line, "oracle-bridge", 7, 50);
  return line;
}

Line criterion4() {
  Line line;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = gen::random_finite_group(rng, 64);
    line.require(g.order() <= 64, "group over order 64");
    line.require(hypercenter(g) == hypercenter_by_intersection(g), "group " + std::to_string(i) + " disagrees");
  }
  require_suite(line, "characterization", 7, 25);
  return line;
}

Line criterion5() {
  Line line;
  std::vector<std::pair<std::string, AlgGroupModel>> corpus{{"example1", gen::example1(3)}};
  int mu = 0;
  for (int p : {0, 2, 3, 5, 7, 11})
    for (int l : {2, 3}) {
      corpus.emplace_back("mu_chain(" + std::to_string(l) + "," + std::to_string(p) + ")", gen::mu_chain(l, p));
      ++mu;
    }
  line.require(mu >= 10, "fewer than 10 mu_chain instances");
  for (const auto& [id, g] : corpus) {
    const auto rep = ucs(g);
    auto zw = rep.term({1, 0});
    if (!zw) {
      line.require(false, id + ": no omega stage");
      continue;
    }
    const auto q = quotient(g, *zw);
    const auto sub = ucs(q.model);
    for (int i = 0; i <= 3; ++i) {
      auto lhs = sub.term({0, i});
      auto rhs = rep.term({1, i});
      line.require(lhs && rhs && q.preimage(*lhs) == *rhs, id + ": stage identity at omega+" + std::to_string(i));
    }
  }
  for (int c = 1; c <= 3; ++c) {
    const auto g = gen::chain_model(c);
    const auto ch = gen::class_c_chain(g);
    for (int i = 0; i <= 4; ++i) {
      auto cls = nilpotency_class_sub(g, ch.term(i));
      line.require(cls && *cls <= c, "chain term over class " + std::to_string(c));
    }
    auto cls = nilpotency_class_sub(g, chain_union_subgroups(g, ch));
    line.require(cls && *cls <= c, "chain union over class " + std::to_string(c));
  }
  require_suite(line, "limit-stage", 7, 10);
  return line;
}

Line criterion6() {
  Line line;
  std::vector<std::pair<std::string, AlgGroupModel>> corpus;
  for (const auto* f : {"example1.json", "example1_char2.json", "heisenberg_torus.json", "heisenberg.json", "ga_gm.json",
                        "dihedral_dual.json"})
    corpus.emplace_back(f, fixture(f).model);
  corpus.emplace_back("mu_chain(3,0)", gen::mu_chain(3, 0));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) corpus.emplace_back("random_connected", gen::random_connected(rng));
  for (int i = 0; i < 25; ++i) corpus.emplace_back("random_bridgeable", gen::random_bridgeable(rng));
  bool transfinite = false, finite_two = false;
  for (const auto& [id, g] : corpus) {
    const auto rep = ucs(g);
    if (rep.status != SeriesStatus::Terminated) continue;
    const long long budget = static_cast<long long>(g.X.rank() + g.L.dim() + 1);
    line.require(rep.limit_stages <= budget && rep.terminal.m <= budget, id + ": " + rep.terminal.str());
    if (id == "example1.json" && rep.terminal.m >= 1) transfinite = true;
    if (id == "heisenberg.json" && rep.terminal.is_finite() && rep.terminal.t >= 2) finite_two = true;
  }
  line.require(transfinite, "example1 does not reach omega");
  line.require(finite_two, "heisenberg fixture does not reach a finite ordinal >= 2");
  require_suite(line, "ordinal-bound", 7, 25);
  return line;
}

Line criterion7() {
  Line line;
  std::vector<std::pair<std::string, AlgGroupModel>> corpus;
  for (const auto* f : {"heisenberg_torus.json", "heisenberg.json", "ga_gm.json"}) corpus.emplace_back(f, fixture(f).model);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) corpus.emplace_back("random_connected " + std::to_string(i), gen::random_connected(rng));
  for (const auto& [id, g] : corpus) {
    const auto rep = ucs(g);
    for (int i = 1; i <= 3; ++i) {
      auto zi = rep.term({0, i});
      if (!zi) continue;
      const auto q = quotient(g, *zi);
      line.require(is_unipotent_subgroup(q.model, z_omega(q.model)), id + ": Z_omega(G/Z_" + std::to_string(i) + ")");
    }
    const auto qs = quotient(g, center_s(g));
    line.require(is_unipotent_subgroup(qs.model, z_omega(qs.model)), id + ": Z_omega(G/Z(G)_s)");
  }
  const auto g = fixture("example1.json").model;
  const auto q = quotient(g, center(g));
  line.require(!is_unipotent_subgroup(q.model, z_omega(q.model)), "example1 unexpectedly satisfies the first check");
  require_suite(line, "unipotence", 7, 25);
  return line;
}

Line criterion8() {
  Line line;
  int checked = 0;
  for (const auto* f : {"heisenberg_torus.json", "ga_gm.json"}) {
    const auto inst = fixture(f);
    if (!inst.faithful_dim) {
      line.require(false, std::string(f) + " has no faithful_dim");
      continue;
    }
    const int d = *inst.faithful_dim;
    const int bound = d * (d - 1) / 2 + 1;
    const auto& g = inst.model;
    for (const auto& s : {fitting(g), hypercenter(g).subgroup}) {
      auto cls = nilpotency_class_sub(g, s);
      line.require(cls && *cls <= bound, std::string(f) + ": class above " + std::to_string(bound));
      ++checked;
    }
  }
  line.require(checked == 4, "fixtures missing");
  require_suite(line, "class-bound", 7, 1);
  return line;
}

template <class F>
int timed(int n, const std::string& title, F body, double limit) {
  const auto t = Clock::now();
  Line line;
  try {
    line = body();
  } catch (const std::exception& e) {
    line.require(false, std::string("exception: ") + e.what());
  }
  return report(n, title, line, since(t), limit);
}

}  // namespace

int main() {
  int failed = 0;
  failed += timed(1, "example1 series reproduction", criterion1, 1);
  failed += timed(2, "hypercenter of connected models", criterion2, 30);
  failed += timed(3, "Fitting subgroup and finite oracle", criterion3, 60);
  failed += timed(4, "hypercenter as intersection", criterion4, 0);
  failed += timed(5, "limit-stage identity and chain unions", criterion5, 0);
  failed += timed(6, "ordinal bound", criterion6, 0);
  failed += timed(7, "unipotence of Z_omega quotients", criterion7, 0);
  failed += timed(8, "class bound for faithful dimension", criterion8, 0);
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed ? 1 : 0;
}
