#include "hyperc/hyperc.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace hyperc;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HYPERC_FIXTURE_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ParsedInstance fixture(const std::string& name) { return parse_instance_text(slurp(name)); }

std::string parse_error_path(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const ParseError& e) {
    return e.path;
  }
  return "<no error>";
}

}  // namespace

TEST(Instance, FixturesMatchGenerators) {
  EXPECT_EQ(fixture("example1.json").model, gen::example1(3));
  EXPECT_EQ(fixture("example1_char2.json").model, gen::example1(2));
  EXPECT_EQ(fixture("heisenberg_torus.json").model, gen::heisenberg_torus({1}, {-1}, {0}));
  EXPECT_EQ(fixture("heisenberg.json").model, gen::heisenberg());
  EXPECT_EQ(fixture("ga_gm.json").model, gen::ga_gm(1));
  EXPECT_EQ(fixture("dihedral_dual.json").model, gen::dihedral_dual(3));
  EXPECT_EQ(fixture("heisenberg_torus.json").faithful_dim, 3);
  EXPECT_EQ(fixture("ga_gm.json").faithful_dim, 2);
  EXPECT_EQ(fixture("example1.json").name, "example1");
  EXPECT_EQ(fixture("example1.json").model.F.name(1), "s");
  EXPECT_EQ(fixture("dihedral_dual.json").model.F.name(1), "g1");
}

TEST(Instance, EmitParseRoundTrip) {
  std::mt19937_64 rng(41);
  std::vector<AlgGroupModel> models{gen::example1(3), gen::mu_chain(3, 0), gen::chain_model(3),
                                    gen::heisenberg_torus({1, 0}, {0, 1}, {1, 1})};
  for (int i = 0; i < 15; ++i) models.push_back(gen::random_connected(rng));
  for (int i = 0; i < 15; ++i) models.push_back(gen::random_bridgeable(rng));
  for (const auto& g : models) {
    const auto text = emit_instance(g, "m", 4).dump();
    const auto back = parse_instance_text(text);
    EXPECT_EQ(back.model, g) << text;
    EXPECT_EQ(back.faithful_dim, 4);
  }
}

TEST(Instance, ErrorsNameTheKey) {
  EXPECT_EQ(parse_error_path(slurp("bad_table.json")), "finite.table[1][1]");
  EXPECT_EQ(parse_error_path(R"({"lattice": {"rank": 1}})"), "$");
  EXPECT_EQ(parse_error_path(R"({"char": 4, "lattice": {"rank": 1}})"), "char");
  EXPECT_EQ(parse_error_path(R"({"char": 0, "lattice": {"rank": 1, "torsion": [4, 6]}})"), "lattice.torsion");
  EXPECT_EQ(parse_error_path(R"({"char": 0, "lattice": {"rank": "x"}})"), "lattice.rank");
  EXPECT_EQ(parse_error_path(R"({"char": 0, "lattice": {"rank": 1},
      "finite": {"elements": ["e", "s"], "table": [["e", "s"], ["s", "e"]]},
      "action_on_lattice": {"t": [[-1]]}})"),
            "action_on_lattice.t");
  EXPECT_EQ(parse_error_path(R"({"char": 0, "lattice": {"rank": 1},
      "finite": {"elements": ["e", "s"], "table": [["e", "s"], ["s", "e"]]},
      "action_on_lattice": {"s": [[-1, 0]]}})"),
            "action_on_lattice.s[0]");
  EXPECT_EQ(parse_error_path(R"({"char": 0, "lattice": {"rank": 1},
      "finite": {"elements": ["e", "s"], "table": [["e", "s"], ["s", "e"]]},
      "action_on_lattice": {"s": [[2]]}})"),
            "action_on_lattice");
  EXPECT_EQ(parse_error_path(R"({"char": 0, "lattice": {"rank": 0},
      "lie": {"dim": 2, "brackets": [[0, 1, 5, 1]]}})"),
            "lie.brackets[0][2]");
  EXPECT_EQ(parse_error_path(R"({"char": 0, "lattice": {"rank": 0},
      "lie": {"dim": 1, "brackets": [], "action": {"e": [["1/0"]]}}})"),
            "lie.action.e[0][0]");
  EXPECT_EQ(parse_error_path(R"({"char": 3, "lattice": {"rank": 0}, "lie": {"dim": 1}})"), "$");
  EXPECT_EQ(parse_error_path("{\"char\": 0,"), "byte 12");
}

TEST(Instance, BigIntegersAndRationals) {
  const std::string text = R"({"char": 0, "lattice": {"rank": 1},
      "lie": {"dim": 3, "brackets": [[0, 1, 2, "-7/3"]], "weights": [["123456789012345678901"], [1], ["123456789012345678902"]]}})";
  const auto inst = parse_instance_text(text);
  EXPECT_EQ(inst.model.L.bracket(0, 1)[2], Rational(-7, 3));
  EXPECT_EQ(inst.model.L.weight(0)[0], Integer("123456789012345678901"));
  const auto j = emit_instance(inst.model);
  EXPECT_TRUE(j["lie"]["weights"][0][0].is_string());
  EXPECT_EQ(parse_instance(j).model, inst.model);
}

TEST(Report, SubgroupEncodingRoundTrips) {
  std::mt19937_64 rng(42);
  std::vector<AlgGroupModel> models{gen::example1(3), gen::heisenberg_torus({1}, {-1}, {0}), gen::chain_model(2)};
  for (int i = 0; i < 10; ++i) models.push_back(gen::random_connected(rng));
  for (int i = 0; i < 10; ++i) models.push_back(gen::random_bridgeable(rng));
  for (const auto& g : models) {
    const auto rep = ucs(g);
    for (const auto& s : rep.stages) EXPECT_EQ(decode_subgroup(g, encode(g, s.subgroup)), s.subgroup);
  }
}

TEST(Report, EmitParseIdentity) {
  const auto g = gen::example1(3);
  std::vector<Report> reports{
      {"ucs", "ok", encode(g, ucs(g)), 12.5},
      {"center", "ok", encode(g, center(g)), 0.25},
      {"fitting", "precondition_violated", {{"error", "requires connected group"}}, 0},
      {"nilclass", "ok", {{"nilpotent", false}, {"class", nullptr}}, 1e-3},
  };
  for (const auto& r : reports) EXPECT_EQ(parse_report(emit(r)), r);
  EXPECT_THROW(parse_report(R"({"operation": "x"})"), ParseError);
}

TEST(Report, SeriesPayloadShape) {
  const auto g = gen::example1(3);
  const auto j = encode(g, ucs(g));
  EXPECT_EQ(j["terminal"], "omega*1+1");
  EXPECT_EQ(j["stages"][0]["ordinal"], "0");
  EXPECT_EQ(j["stages"][3]["subgroup"]["quotient_X"], "Z/8");
  const auto& last = j["stages"][j["stages"].size() - 2];
  EXPECT_EQ(last["ordinal"], "omega*1");
  EXPECT_EQ(last["certificate"]["kind"], "UnitFactorSplit");
  // no ordinal is rendered with an omega*0 prefix
  for (const auto& s : j["stages"]) EXPECT_EQ(s["ordinal"].get<std::string>().find("omega*0"), std::string::npos);
}
