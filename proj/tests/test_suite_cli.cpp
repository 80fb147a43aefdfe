#include <gtest/gtest.h>

#include <sstream>

#include "qcong/cli.hpp"
#include "qcong/suite.hpp"
#include "qcong/theorems.hpp"

namespace qcong {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Drops the timing field so outputs from different runs compare equal.
nlohmann::json without_timing(nlohmann::json j) {
  for (auto& item : j) item.erase("elapsed_ms");
  return j;
}

TEST(CliVerify, Eq13) {
  const auto run = cli({"verify", "eq13", "a=1", "m=1"});
  EXPECT_EQ(run.code, kExitPass);
  EXPECT_NE(run.out.find("witness=0:1,1:-1,2:1"), std::string::npos) << run.out;
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(cli({"verify", "eq13", "a=0", "m=1"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "eq13", "a=1"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "eq13", "a=1", "m=1", "z=3"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "eq13", "a=x", "m=1"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "nonsense"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "lemma31", "a=1", "k=1", "l=2"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "sun_tauraso", "p=9", "a=1"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
}

TEST(CliVerify, Ssz12ShowsSum) {
  const auto run = cli({"verify", "ssz12", "a=2"});
  EXPECT_EQ(run.code, kExitPass);
  EXPECT_NE(run.out.find("17577"), std::string::npos);
}

TEST(CliVerify, FailingChecksExitOne) {
  EXPECT_EQ(cli({"verify", "eq14", "a=1", "perturb=1"}).code, kExitFail);
  EXPECT_EQ(cli({"verify", "eq13", "a=1", "m=1", "truncate=1"}).code, kExitFail);
  const auto psi = cli({"verify", "eq21", "a=1", "m=1", "psi=2"});
  EXPECT_EQ(psi.code, kExitFail);
  EXPECT_NE(psi.out.find("FAIL eq21"), std::string::npos);
}

TEST(CliVerify, JsonOutput) {
  const auto run = cli({"verify", "eq13", "a=1", "m=1", "--output", "json"});
  ASSERT_EQ(run.code, kExitPass);
  const auto j = nlohmann::json::parse(run.out);
  EXPECT_EQ(j["statement"], "eq13");
  EXPECT_EQ(j["witness"], "0:1,1:-1,2:1");
  EXPECT_EQ(j["params"]["a"], 1);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(CliShow, Objects) {
  EXPECT_EQ(cli({"show", "qbinom", "n=4", "k=2"}).out, "0:1,1:1,2:2,3:1,4:1\n");
  EXPECT_EQ(cli({"show", "cyclotomic", "d=9"}).out, "0:1,3:1,6:1\n");
  EXPECT_EQ(cli({"show", "qint", "n=3"}).out, "0:1,1:1,2:1\n");
  EXPECT_EQ(cli({"show", "sum", "n=3"}).out, "0:1,1:1,2:2,3:1,4:2,5:1,6:1\n");
  EXPECT_EQ(cli({"show", "qbinom", "n=4"}).code, kExitUsage);
  EXPECT_EQ(cli({"show", "matrix", "n=4"}).code, kExitUsage);
}

TEST(CliSuite, ConfigErrors) {
  EXPECT_EQ(cli({"suite", "--a-max", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"suite", "--level", "quick", "--a-max", "3"}).code, kExitUsage);
  EXPECT_EQ(cli({"suite", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"suite", "--level", "medium"}).code, kExitUsage);
}

TEST(CliSuite, QuickJsonRoundTripsAndIsDeterministic) {
  const auto serial = cli({"suite", "--level", "quick", "--output", "json", "--jobs", "1"});
  ASSERT_EQ(serial.code, kExitPass) << serial.err;
  const auto parsed = nlohmann::json::parse(serial.out);
  ASSERT_TRUE(parsed.is_array());
  const auto& summary = parsed.back().at("summary");
  EXPECT_TRUE(summary.at("ok").get<bool>());
  EXPECT_EQ(summary.at("passed"), summary.at("total"));
  EXPECT_EQ(summary.at("total").get<std::size_t>() + 1, parsed.size());
  EXPECT_EQ(parsed.dump(2) + "\n", serial.out);

  for (std::size_t i = 0; i + 1 < parsed.size(); ++i) {
    const auto& item = parsed[i];
    for (const char* key : {"statement", "params", "pass", "witness", "elapsed_ms", "expected"}) {
      EXPECT_TRUE(item.contains(key)) << key;
    }
    if (!item["pass"].get<bool>()) EXPECT_FALSE(item["witness"].is_null());
  }

  const auto parallel = cli({"suite", "--level", "quick", "--output", "json", "--jobs", "4"});
  ASSERT_EQ(parallel.code, kExitPass);
  auto strip = [](nlohmann::json j) {
    j.erase(j.end() - 1);
    return without_timing(std::move(j));
  };
  EXPECT_EQ(strip(parsed), strip(nlohmann::json::parse(parallel.out)));
}

TEST(CliSuite, TextSummary) {
  const auto run = cli({"suite", "--level", "quick", "--a-max", "1", "--m-max", "1", "--n-max", "20"});
  EXPECT_EQ(run.code, kExitPass);
  EXPECT_NE(run.out.find("PASSED "), std::string::npos);
  EXPECT_NE(run.out.find("[control: expected FAIL]"), std::string::npos);
}

TEST(Suite, UnexpectedlyPassingControlFailsTheRun) {
  std::vector<SuiteTask> tasks;
  tasks.push_back({"eq13", {{"a", 1}, {"m", 1}}, true, [] { return verify_eq13(1, 1); }});
  // A "control" that in fact holds must turn the run red.
  tasks.push_back({"eq14", {{"a", 1}}, false, [] { return verify_eq14(1); }});
  const auto result = run_tasks(std::move(tasks), 2);
  EXPECT_FALSE(result.ok());
  EXPECT_EQ(result.matched(), 1u);
}

TEST(Suite, ErrorsBecomeFailingReports) {
  SuiteTask task{"eq21", {{"a", 1}, {"m", 1}, {"psi", 2}}, false,
                 [] { return verify_eq21(1, 1, PsiSpec::identity(1, 1)); }};
  const auto report = run_guarded(task);
  EXPECT_FALSE(report.pass);
  EXPECT_EQ(report.witness, "-2,0");

  SuiteTask broken{"eq13", {{"a", 0}}, true, [] { return verify_eq13(0, 1); }};
  const auto failed = run_guarded(broken);
  EXPECT_FALSE(failed.pass);
  EXPECT_EQ(failed.witness->rfind("error: ", 0), 0u);
}

TEST(Report, JsonRoundTrip) {
  for (const auto& report : {verify_eq13(1, 1), verify_eq14(1, true), psi_check(PsiSpec::zero(1, 1))}) {
    const auto j = to_json(report);
    EXPECT_EQ(to_json(report_from_json(j)).dump(), j.dump());
  }
}

TEST(Report, TextElidesLongWitnesses) {
  VerificationReport report;
  report.statement = "eq13";
  report.pass = true;
  report.witness = to_canonical(q_int(300));
  EXPECT_NE(format_text(report).find("<300 terms elided>"), std::string::npos);
  report.witness = to_canonical(q_int(3));
  EXPECT_NE(format_text(report).find("witness=0:1,1:1,2:1"), std::string::npos);
}

}  // namespace
}  // namespace qcong
