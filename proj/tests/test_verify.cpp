#include "hyperc/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hyperc;

TEST(Verify, EveryClaimIsChecked) {
  const auto results = run_suite("all", 7, 6);
  std::set<std::string> cited;
  for (const auto& r : results) cited.insert(r.claim);
  std::set<std::string> registered;
  for (const auto& c : claim_registry()) {
    EXPECT_TRUE(registered.insert(c.id).second) << "duplicate claim id " << c.id;
    EXPECT_TRUE(cited.count(c.id)) << "no check cites " << c.id;
  }
  for (const auto& id : cited) EXPECT_TRUE(registered.count(id)) << "unregistered claim " << id;
}

TEST(Verify, SuitesPassWithoutSkips) {
  for (const auto& s : suite_names()) {
    const auto results = run_suite(s, 7, 8);
    const auto sum = summarize(results);
    EXPECT_GT(sum.pass, 0) << s;
    EXPECT_EQ(sum.fail, 0) << s;
    EXPECT_EQ(sum.skip, 0) << s;
    for (const auto& r : results)
      if (r.verdict != Verdict::Pass) ADD_FAILURE() << s << ": " << r.check << " on " << r.instance << ": " << r.detail;
  }
}

TEST(Verify, Deterministic) {
  EXPECT_EQ(run_suite("oracle-bridge", 99, 10), run_suite("oracle-bridge", 99, 10));
  EXPECT_EQ(run_suite("connected-main", 5, 10), run_suite("connected-main", 5, 10));
  EXPECT_NE(run_suite("connected-main", 5, 10), run_suite("connected-main", 6, 10));
}

TEST(Verify, OtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto sum = summarize(run_suite("all", seed, 10));
    EXPECT_EQ(sum.fail, 0) << seed;
  }
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", 1, 1), std::invalid_argument); }

TEST(Verify, FailuresCarryWitnesses) {
  std::vector<CheckResult> out;
  detail::Recorder rec(out);
  rec.check("c", "center.standard_form", "inst", false, "stage 3");
  rec.guarded("g", "center.standard_form", "inst", [] { throw UndeterminedLimit("x"); });
  rec.guarded("h", "center.standard_form", "inst", [] { throw std::logic_error("boom"); });
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].detail, "stage 3");
  EXPECT_EQ(out[1].verdict, Verdict::Skip);
  EXPECT_EQ(out[2].verdict, Verdict::Fail);
  EXPECT_NE(out[2].detail.find("boom"), std::string::npos);
}
