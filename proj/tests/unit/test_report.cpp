#include "homgeo/report.hpp"

#include <gtest/gtest.h>

using namespace homgeo;

TEST(Json, IntegersAreDecimalStrings) {
  const Integer big("123456789012345678901234567890");
  EXPECT_EQ(to_json(big), "123456789012345678901234567890");
  const ParamSystem ps{big, 7, 1, 23};
  const auto j = to_json(ps);
  EXPECT_EQ(j["s1"], "123456789012345678901234567890");
  EXPECT_EQ(param_system_from_json(j), ps);
}

TEST(Json, ParamSystemAcceptsNumbers) {
  const nlohmann::json j{{"s1", 3}, {"alpha", 6}, {"alphaPrime", 0}, {"dim", 23}};
  EXPECT_EQ(param_system_from_json(j), (ParamSystem{3, 6, 0, 23}));
}

TEST(ReportStatus, ExitCodes) {
  Report r;
  EXPECT_EQ(r.exit_code(), 0);
  r.checks.emplace_back("a");
  r.checks.back().status = CheckStatus::Gap;
  EXPECT_EQ(r.overall(), CheckStatus::Gap);
  EXPECT_EQ(r.exit_code(), 2);
  r.checks.emplace_back("b");
  r.checks.back().status = CheckStatus::Fail;
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(VerifyAll, SmallRunPasses) {
  VerifyOptions o;
  o.sieve_limit = 5000;
  o.s1_max = 15;
  o.alpha_max = 300;
  o.grid_s1_max = 10;
  o.grid_param_max = 200;
  const Report r = verify_all(o);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::Pass) << c.name << " " << c.details.dump();
  const auto j = to_json(r);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["timestamp"].get<std::string>().size(), 20u);
}

TEST(SearchCheck, FlagsMissingClassical) {
  SearchSummary s = run_search(12, 5);
  EXPECT_EQ(search_check(s).status, CheckStatus::Pass);
  s.classical_affine[5] = 0;
  EXPECT_EQ(search_check(s).status, CheckStatus::Fail);
}
