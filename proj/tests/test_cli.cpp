#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "orbiseif/errors.hpp"
#include "orbiseif_cli/report.hpp"
#include "orbiseif_cli/verify.hpp"

using namespace orbiseif;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(ORBISEIF_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  for (const auto& s : enumerate_specs(120, all_families())) {
    if (!is_fibered(s.family)) continue;
    cli::Report r = cli::make_report(engine_report(s));
    if (s.m == 1) r.verification = cli::Verification{true, {}};
    nlohmann::json j = nlohmann::json::parse(cli::to_json(r).dump());
    EXPECT_EQ(cli::report_from_json(j), r) << s.str();
  }
}

TEST(Report, JsonSchema) {
  nlohmann::json j = nlohmann::json::parse(cli::to_json(cli::make_report(engine_report({FamilyId::F9, 1, 1, 1, 1}))).dump());
  EXPECT_EQ(j["family"], "9");
  EXPECT_EQ(j["params"]["m"], 1);
  EXPECT_EQ(j["base"]["kind"], "S2");
  EXPECT_EQ(j["base"]["cones"], nlohmann::json({2, 3, 5}));
  EXPECT_TRUE(j["base"]["xi"].is_null());
  EXPECT_EQ(j["euler"]["num"], -1);
  EXPECT_EQ(j["euler"]["den"], 30);
  ASSERT_EQ(j["invariants"].size(), 3u);
  for (const char* key : {"num", "den", "normalizedNum", "index", "location"}) {
    EXPECT_TRUE(j["invariants"][0].contains(key)) << key;
  }
  EXPECT_TRUE(j.contains("underlying"));
  EXPECT_TRUE(j.contains("singularComponents"));
  EXPECT_EQ(j["provenance"], "row-9");
}

TEST(Report, DeterministicSerialization) {
  const FamilySpec s{FamilyId::F11, 3, 5, 4, 1};
  EXPECT_EQ(cli::to_json(cli::make_report(engine_report(s))).dump(),
            cli::to_json(cli::make_report(engine_report(s))).dump());
}

TEST(FamilyList, Groups) {
  auto t4 = cli::parse_family_list("table4");
  EXPECT_EQ(t4.size(), 25u);
  EXPECT_EQ(cli::parse_family_list("1,1p,1").size(), 2u);
  EXPECT_EQ(cli::parse_family_list("abelian,dihedral").size(), 4u);
  EXPECT_THROW(cli::parse_family_list("1,zz"), PreconditionError);
}

TEST(Verify, SweepIsDeterministicAcrossWorkerCounts) {
  auto specs = enumerate_specs(60, cli::parse_family_list("fibered"));
  cli::SweepSummary a = cli::verify_sweep(specs, 1);
  cli::SweepSummary b = cli::verify_sweep(specs, 4);
  ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    EXPECT_EQ(a.outcomes[i].spec, b.outcomes[i].spec);
    EXPECT_EQ(a.outcomes[i].diffs, b.outcomes[i].diffs);
  }
  EXPECT_EQ(a.failures, 0u);
}

TEST(Verify, WorkersFromEnvironment) {
  setenv("ORBISEIF_WORKERS", "3", 1);
  EXPECT_EQ(cli::default_workers(), 3u);
  setenv("ORBISEIF_WORKERS", "zero", 1);
  EXPECT_GE(cli::default_workers(), 1u);
  unsetenv("ORBISEIF_WORKERS");
}

TEST(Verify, CompareReportsDifferences) {
  const FamilySpec s{FamilyId::F2, 2, 3, 1, 1};
  EngineReport e = engine_report(s);
  OracleReport o = oracle_report(goursat_group(s));
  EXPECT_TRUE(cli::compare(e, o).empty());
  e.seifert.euler = Rational(-1, 3);
  auto diffs = cli::compare(e, o);
  ASSERT_FALSE(diffs.empty());
  EXPECT_EQ(diffs.front().rfind("euler", 0), 0u);
}

TEST(Cli, Compute) {
  CliRun r = run_cli("compute --family 9 -m 1 --json");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["euler"]["num"], -1);
  EXPECT_EQ(j["euler"]["den"], 30);
  EXPECT_EQ(j["base"]["cones"], nlohmann::json({2, 3, 5}));

  r = run_cli("compute --family 1 -m 1 -n 1 -r 1 -s 1");
  EXPECT_EQ(r.code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["underlying"]["kind"], "lens");
  EXPECT_EQ(j["underlying"]["p"], 2);
  EXPECT_EQ(j["underlying"]["q"], 1);
}

TEST(Cli, ComputeFlags) {
  CliRun r = run_cli("compute --family 9 -m 1 --mirror --normalized");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["euler"]["num"], 1);
  EXPECT_EQ(j["euler"]["den"], 30);
  r = run_cli("compute --family 2 -m 2 -n 3 --text --check");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("S2(2,2,3)"), std::string::npos);
  EXPECT_NE(r.out.find("agrees"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  CliRun r = run_cli("compute --family 1p -m 2 -n 1 -r 2 -s 1");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("m must be odd"), std::string::npos);
  EXPECT_EQ(run_cli("compute --family 31").code, 3);
  EXPECT_EQ(run_cli("compute --family nope").code, 1);
  EXPECT_EQ(run_cli("verify --max-order 0").code, 1);
  EXPECT_EQ(run_cli("verify --bogus").code, 1);
  EXPECT_EQ(run_cli("verify --max-order 40 --families 1,1p,11,11p --jobs 2").code, 0);
}

TEST(Cli, Enumerate) {
  CliRun r = run_cli("enumerate --max-order 24 --families 9");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out).empty());
  r = run_cli("enumerate --max-order 120 --families 30,31");
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["family"], "31");
  EXPECT_EQ(j[0]["fibered"], false);
}
