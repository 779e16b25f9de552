#include "hyperc/hyperc.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hyperc;

namespace {

enum Exit { Ok = 0, ChecksFailed = 1, BadInput = 2, Mixed = 3, Undetermined = 4, Precondition = 5 };

struct Options {
  std::string input;
  std::string op = "ucs";
  UcsOptions ucs;
  std::string suite = "all";
  std::uint64_t seed = 7;
  int count = 25;
  std::string format = "text";
};

std::string text_subgroup(const AlgGroupModel& g, const StdSubgroup& s) {
  std::ostringstream out;
  out << str(g, s);
  if (s.M.rows() > 0 && s.M.rows() < g.L.dim()) {
    out << "\n    M basis:";
    for (std::size_t r = 0; r < s.M.rows(); ++r) {
      out << " (";
      for (std::size_t c = 0; c < s.M.cols(); ++c) out << (c ? " " : "") << to_string(s.M(r, c));
      out << ")";
    }
  }
  return out.str();
}

std::string text_series(const AlgGroupModel& g, const CentralSeriesReport& rep) {
  std::ostringstream out;
  for (const auto& s : rep.stages) {
    out << "Z_" << s.ordinal.str() << ": " << text_subgroup(g, s.subgroup);
    if (s.certificate) out << "  [" << to_string(s.certificate->kind) << ", depth " << s.certificate->depth << "]";
    out << "\n";
  }
  out << "terminal: " << rep.terminal.str() << " (" << to_string(rep.status) << ")";
  if (!rep.message.empty()) out << ": " << rep.message;
  return out.str();
}

struct Outcome {
  int code = Ok;
  json result;
  std::string text;
};

Outcome subgroup_outcome(const AlgGroupModel& g, const StdSubgroup& s) {
  return {Ok, encode(g, s), text_subgroup(g, s)};
}

Outcome run_verify(const Options& o) {
  const auto results = run_suite(o.suite, o.seed, o.count);
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    json e = {{"check", r.check}, {"claim", r.claim}, {"instance", r.instance}, {"verdict", to_string(r.verdict)}};
    if (!r.detail.empty()) e["detail"] = r.detail;
    arr.push_back(e);
    if (r.verdict != Verdict::Pass)
      text << to_string(r.verdict) << "  " << r.check << "  " << r.instance << "  " << r.detail << "\n";
  }
  const auto s = summarize(results);
  text << o.suite << ": " << s.pass << " passed, " << s.fail << " failed, " << s.skip << " skipped";
  return {s.fail ? ChecksFailed : Ok, {{"suite", o.suite}, {"seed", o.seed}, {"count", o.count}, {"results", arr},
                                      {"passed", s.pass}, {"failed", s.fail}, {"skipped", s.skip}},
          text.str()};
}

Outcome dispatch(const Options& o, const ParsedInstance& inst) {
  const AlgGroupModel& g = inst.model;
  if (o.op == "validate") {
    json r = {{"name", inst.name}, {"char", g.characteristic}, {"X", g.X.str()}, {"F_order", g.F.order()},
              {"lie_dim", g.L.dim()}, {"connected", is_connected(g)}, {"valid", true}};
    std::ostringstream t;
    t << (inst.name.empty() ? "instance" : inst.name) << ": valid; char " << g.characteristic << ", X = " << g.X.str()
      << ", |F| = " << g.F.order() << ", dim L = " << g.L.dim() << (is_connected(g) ? ", connected" : ", disconnected");
    return {Ok, r, t.str()};
  }
  if (o.op == "center") return subgroup_outcome(g, center(g));
  if (o.op == "ucs") {
    const auto rep = ucs(g, o.ucs);
    int code = Ok;
    if (rep.status == SeriesStatus::MixedCenterUnsupported) code = Mixed;
    else if (rep.status == SeriesStatus::UndeterminedLimit) code = Undetermined;
    json r = encode(g, rep);
    r["status"] = to_string(rep.status);
    return {code, r, text_series(g, rep)};
  }
  if (o.op == "zomega") return subgroup_outcome(g, z_omega(g, o.ucs));
  if (o.op == "hypercenter") {
    const auto h = hypercenter(g, o.ucs);
    return {Ok, {{"subgroup", encode(g, h.subgroup)}, {"lambda", h.lambda.str()}},
            text_subgroup(g, h.subgroup) + "\nlambda: " + h.lambda.str()};
  }
  if (o.op == "fitting") return subgroup_outcome(g, fitting(g));
  if (o.op == "rads") return subgroup_outcome(g, rad_u(g));
  if (o.op == "center-s") return subgroup_outcome(g, center_s(g));
  if (o.op == "nilclass") {
    const auto c = nilpotency_class(g, o.ucs);
    return {Ok, {{"nilpotent", c.has_value()}, {"class", c ? json(*c) : json(nullptr)}},
            c ? "nilpotent of class " + std::to_string(*c) : "not nilpotent"};
  }
  if (o.op == "oracle-compare") {
    (void)to_finite(g);  // precondition check
    std::vector<CheckResult> results;
    detail::Recorder rec(results);
    detail::bridge_checks(rec, g, inst.name.empty() ? "input" : inst.name);
    json arr = json::array();
    std::ostringstream t;
    for (const auto& r : results) {
      arr.push_back({{"check", r.check}, {"verdict", to_string(r.verdict)}, {"detail", r.detail}});
      t << to_string(r.verdict) << "  " << r.check << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
    }
    const auto s = summarize(results);
    t << s.pass << " agree, " << s.fail << " disagree";
    return {s.fail ? ChecksFailed : Ok, {{"results", arr}}, t.str()};
  }
  throw std::logic_error("unhandled operation " + o.op);
}

int finish(const Options& o, const std::string& status, const Outcome& out, double ms) {
  if (o.format == "json") {
    std::cout << emit(Report{o.op, status, out.result, ms}) << "\n";
  } else {
    std::cout << out.text << "\n";
  }
  return out.code;
}

int fail(const Options& o, int code, const std::string& status, const std::string& message) {
  std::cerr << "hyperc: " << message << "\n";
  if (o.format == "json") std::cout << emit(Report{o.op, status, {{"error", message}}, 0}) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Upper central series, hypercenter and Fitting subgroup of (U x| D(X)) x| F models"};
  app.add_option("--input", o.input, "instance file (JSON)");
  app.add_option("--op", o.op, "operation")
      ->check(CLI::IsMember({"validate", "center", "ucs", "zomega", "hypercenter", "fitting", "rads", "center-s",
                             "nilclass", "verify", "oracle-compare"}));
  app.add_option("--max-finite-steps", o.ucs.max_finite_steps, "finite stages before a limit is attempted")
      ->check(CLI::Range(1, 100000));
  app.add_option("--max-limit-stages", o.ucs.max_limit_stages, "limit stages allowed")->check(CLI::Range(0, 1000));
  app.add_option("--chain-depth", o.ucs.chain_depth, "chain limit iteration depth")->check(CLI::Range(1, 100000));
  app.add_option("--suite", o.suite, "verify suite, or 'all'");
  app.add_option("--seed", o.seed, "verify seed");
  app.add_option("--count", o.count, "instances per random family")->check(CLI::Range(0, 100000));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return BadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count(); };
  try {
    if (o.op == "verify") {
      const Outcome out = run_verify(o);
      return finish(o, out.code == Ok ? "ok" : "checks_failed", out, elapsed());
    }
    if (o.input.empty()) return fail(o, BadInput, "parse_error", "--input is required for --op " + o.op);
    std::ifstream in(o.input);
    if (!in) return fail(o, BadInput, "parse_error", "cannot read " + o.input);
    std::stringstream buf;
    buf << in.rdbuf();
    const ParsedInstance inst = parse_instance_text(buf.str());
    const Outcome out = dispatch(o, inst);
    if (out.code == Mixed || out.code == Undetermined) std::cerr << "hyperc: series did not terminate\n";
    return finish(o, out.code == Ok ? "ok" : out.code == ChecksFailed ? "checks_failed" : "incomplete", out, elapsed());
  } catch (const ParseError& e) {
    return fail(o, BadInput, "parse_error", e.what());
  } catch (const MixedCenterUnsupported& e) {
    return fail(o, Mixed, "mixed_center_unsupported", e.what());
  } catch (const UndeterminedLimit& e) {
    return fail(o, Undetermined, "undetermined_limit", e.what());
  } catch (const PreconditionViolated& e) {
    return fail(o, Precondition, "precondition_violated", e.what());
  } catch (const InvalidGroup& e) {
    return fail(o, BadInput, "invalid_input", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(o, BadInput, "invalid_input", e.what());
  }
}
