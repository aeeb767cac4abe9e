#include <gtest/gtest.h>

#include <json.hpp>

#include "carleman/report.hpp"

using namespace carleman;

namespace {

VerificationReport make(double lhs, LogNumber rhs) {
  VerificationReport r;
  r.estimate_id = "x";
  r.lhs = lhs;
  r.rhs = rhs;
  r.finalize();
  return r;
}

}  // namespace

TEST(Report, PassPredicateSlack) {
  EXPECT_TRUE(make(1.0, LogNumber::from_value(1.0)).pass);
  EXPECT_TRUE(make(1.0 + 5e-7, LogNumber::from_value(1.0)).pass);
  EXPECT_FALSE(make(1.0 + 2e-6, LogNumber::from_value(1.0)).pass);
  const auto r = make(0.5, LogNumber::from_value(2.0));
  EXPECT_DOUBLE_EQ(*r.ratio, 0.25);
  EXPECT_NEAR(r.log_gap, std::log(4.0), 1e-15);
  EXPECT_EQ(r.status, ReportStatus::pass);
}

TEST(Report, ZeroLhs) {
  const auto r = make(0.0, LogNumber::zero());
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(*r.ratio, 0.0);
  EXPECT_TRUE(std::isinf(r.log_gap));
}

TEST(Report, OverflowSafeMarker) {
  const auto r = make(3.0, LogNumber::from_log(5000.0));
  EXPECT_TRUE(r.pass);
  EXPECT_FALSE(r.ratio.has_value());
  const auto j = nlohmann::json::parse(to_json({r}));
  EXPECT_EQ(j[0]["ratio"], "rhs-overflow-safe");
  EXPECT_NEAR(j[0]["rhs"]["log10"].get<double>(), 5000.0 / std::log(10.0), 1e-9);
  EXPECT_NE(to_csv({r}).find("rhs-overflow-safe"), std::string::npos);
}

TEST(Report, ExpectedFailAndGating) {
  VerificationReport r;
  r.lhs = 2.0;
  r.rhs = LogNumber::one();
  r.expected_fail = true;
  r.gating = false;
  r.finalize();
  EXPECT_EQ(r.status, ReportStatus::expected_fail);
  EXPECT_TRUE(all_gating_pass({r}));
  r.gating = true;
  EXPECT_FALSE(all_gating_pass({r}));
  EXPECT_FALSE(all_gating_pass({error_report("e", {}, "boom")}));
  EXPECT_TRUE(all_gating_pass({}));
}

TEST(Report, JsonKeyOrder) {
  auto r = make(1.0, LogNumber::from_value(2.0));
  r.add_param("zeta", "1");
  r.add_param("alpha", "2");
  const auto j = nlohmann::ordered_json::parse(to_json({r}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  const std::vector<std::string> want = {"estimate_id", "status", "pass", "gating", "expected_fail",
                                         "params", "lhs", "rhs", "ratio", "log_gap", "samples",
                                         "quadrature_level", "notes"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(j[0]["params"].begin().key(), "zeta");
}

TEST(Report, CsvQuoting) {
  EXPECT_EQ(csv_quote("plain"), "plain");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_quote("two\nlines"), "\"two\nlines\"");
  auto r = make(1.0, LogNumber::from_value(2.0));
  r.notes = {"a, b", "c"};
  const std::string row = to_csv_row(r);
  EXPECT_NE(row.find("\"a, b; c\""), std::string::npos);
  EXPECT_EQ(to_csv({r}).substr(0, csv_header().size()), csv_header());
  EXPECT_NE(csv_header().find("log10:rhs"), std::string::npos);
}

TEST(Report, ErrorReportCarriesMessage) {
  const auto e = error_report("id", {{"k", "v"}}, "bad input");
  EXPECT_EQ(e.status, ReportStatus::error);
  EXPECT_EQ(e.notes.at(0), "error: bad input");
  const auto j = nlohmann::json::parse(to_json({e}));
  EXPECT_EQ(j[0]["status"], "error");
  EXPECT_TRUE(j[0]["log_gap"].is_null());
}
