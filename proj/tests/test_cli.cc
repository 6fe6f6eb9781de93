#include "west/bench.hh"
#include "west/cli.hh"
#include "west/formula_io.hh"

#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace west {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
  return std::filesystem::temp_directory_path() /
         ("west_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(CliRegex, GlobalExample) {
  const CliResult r = cli({"regex", "G[0,1] p0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,1\n");
}

TEST(CliRegex, PaddedJson) {
  const CliResult r = cli({"regex", "--pad", "--json", "p1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"regex\":\"S1\",\"nvars\":2,\"complen\":1,\"alternatives\":1}\n");
}

TEST(CliRegex, PadExtendsToComplen) {
  EXPECT_EQ(cli({"regex", "p0 | F[1,2] p0"}).out, "1\nS,S,1\nS,1\n");
  EXPECT_EQ(cli({"regex", "--pad", "F[0,1] p0"}).out, "S,1\n1,S\n");
}

TEST(CliRegex, UnsatisfiablePrintsEmptyLine) {
  const CliResult r = cli({"regex", "false"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\n");
}

TEST(CliRegex, ParseErrorExits65WithCaret) {
  const CliResult r = cli({"regex", "p0 & & p1"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(r.out, "");
  EXPECT_NE(r.err.find("line 1, column 6"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("  p0 & & p1\n       ^"), std::string::npos) << r.err;
}

TEST(CliRegex, IntervalErrorExits65) {
  const CliResult r = cli({"regex", "G[2,1] p0"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("interval bound a ≤ b violated at 2..1"),
            std::string::npos);
}

TEST(CliMatch, Verdicts) {
  CliResult r = cli({"match", "p0", "--trace", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "match\n");
  r = cli({"match", "G[0,1] p0", "--trace", "1,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "no-match\n");
  r = cli({"match", "--pad", "G[0,1] p0", "--trace", "1,1"});
  EXPECT_EQ(r.code, 0);
}

TEST(CliMatch, BadTraceExits65) {
  const CliResult r = cli({"match", "p0", "--trace", "2"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("trace"), std::string::npos);
}

TEST(CliMatch, MissingTraceIsUsageError) {
  EXPECT_EQ(cli({"match", "p0"}).code, kExitUsage);
}

TEST(CliEquiv, Verdicts) {
  CliResult r = cli({"equiv", "F[0,1] p0", "p0 | F[1,1] p0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equivalent\n");

  r = cli({"equiv", "p0", "p1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "inequivalent\nwitness: 01\naccepted by: second\n");

  r = cli({"equiv", "--budget", "4", "G[0,3] p0 | p1", "p2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.rfind("limit: ", 0), 0u) << r.out;
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"regex"}).code, kExitUsage);
  EXPECT_EQ(cli({"regex", "p0", "--threads", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"random", "--nvars", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"random", "--count", "x"}).code, kExitUsage);
  EXPECT_EQ(cli({"bench", "--timeout", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"bench", "--suite", "/nonexistent/suite.txt"}).code,
            kExitUsage);
}

TEST(CliUsage, HelpExitsZero) {
  const CliResult r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("regex"), std::string::npos);
}

TEST(CliRandom, MatchesLibraryGenerator) {
  const CliResult r = cli({"random", "--count", "4", "--nvars", "2", "--depth", "2",
                     "--bound", "3", "--seed", "9"});
  EXPECT_EQ(r.code, 0);
  std::string expect;
  for (const Formula &f : random_formulas({2, 2, 3, 9, 4, false})) {
    expect += pretty(f) + "\n";
  }
  EXPECT_EQ(r.out, expect);
}

TEST(CliRandom, DeterministicAcrossThreads) {
  const std::vector<std::string> base = {"random", "--count", "200", "--nvars",
                                         "3", "--depth", "3", "--bound", "4",
                                         "--seed", "5", "--nested-ur"};
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(cli(base).out, cli(threaded).out);
}

TEST(CliValidate, SmallBatchPasses) {
  const CliResult r = cli({"validate", "--count", "60", "--nvars", "2", "--depth",
                     "2", "--bound", "2", "--seed", "3", "--threads", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("passed ", 0), 0u);
  EXPECT_NE(r.out.find(" failed 0 "), std::string::npos) << r.out;
}

TEST(CliValidate, SkipsOverBudgetFormulas) {
  const CliResult r = cli({"validate", "--count", "5", "--nvars", "3", "--depth",
                     "0", "--seed", "1", "--max-bits", "0"});
  EXPECT_EQ(r.code, 0);
  // atoms over at least one variable need 2 bits; constants need none
  EXPECT_NE(r.out.find(" failed 0 "), std::string::npos) << r.out;
}

TEST(CliBench, WritesCsvFile) {
  const auto csv = temp_path("bench.csv");
  const CliResult r = cli({"bench", "--count", "10", "--nvars", "2", "--depth", "1",
                     "--bound", "2", "--seed", "1", "--timeout", "10",
                     "--out", csv.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("formulas 10 ok 10 timeout 0"), std::string::npos)
      << r.out;
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "formula,n,d,b,ms,outcome,alts,len");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) {
    ++rows;
  }
  EXPECT_EQ(rows, 10u);
  std::filesystem::remove(csv);
}

TEST(CliBench, SuiteFileToStdout) {
  const auto suite = temp_path("suite.txt");
  {
    std::ofstream out(suite);
    out << "# atoms\np0\n\n  !p1\nG[0,2] (p0 | p1)\n";
  }
  const CliResult r = cli({"bench", "--suite", suite.string(), "--timeout", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "formula,n,d,b,ms,outcome,alts,len");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("p0,1,0,0,", 0), 0u) << line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("!p1,2,0,0,", 0), 0u) << line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("\"G[0,2] (p0 | p1)\",2,2,2,", 0), 0u) << line;
  EXPECT_NE(line.find(",ok,8,3"), std::string::npos) << line;
  EXPECT_NE(r.err.find("formulas 3 ok 3"), std::string::npos);
  std::filesystem::remove(suite);
}

TEST(CliBench, SuiteParseErrorNamesLine) {
  const auto suite = temp_path("bad.txt");
  {
    std::ofstream out(suite);
    out << "p0\np0 &\n";
  }
  const CliResult r = cli({"bench", "--suite", suite.string()});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find(":2"), std::string::npos) << r.err;
  std::filesystem::remove(suite);
}

TEST(Bench, EmptyBatchGivesHeaderOnly) {
  std::ostringstream out;
  write_bench_csv(out, run_bench({}, BenchConfig{}));
  EXPECT_EQ(out.str(), "formula,n,d,b,ms,outcome,alts,len\n");
}

TEST(Bench, AtomsAreFast) {
  std::vector<BenchItem> items;
  for (const char *text : {"p0", "!p1", "true", "false", "p4"}) {
    items.push_back(measured_item(parse_formula(text)));
  }
  const auto records = run_bench(items, BenchConfig{});
  for (const BenchRecord &r : records) {
    EXPECT_EQ(r.outcome, BenchOutcome::Ok);
    EXPECT_GE(r.ms, 0.0);
    EXPECT_LT(r.ms, 10.0);
    EXPECT_TRUE(r.alternatives.has_value());
    EXPECT_TRUE(r.length.has_value());
  }
}

TEST(Bench, TinyTimeoutIsRecordedAndExcluded) {
  std::vector<BenchItem> items = {
      measured_item(parse_formula("p0")),
      measured_item(parse_formula(
          "G[0,8] (p0 U[0,8] (p1 R[0,8] (p2 | F[0,8] p3)))")),
  };
  BenchConfig config;
  config.timeout = std::chrono::duration<double>(0.001);
  const auto records = run_bench(items, config);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[1].outcome, BenchOutcome::Timeout);
  EXPECT_FALSE(records[1].alternatives.has_value());

  const BenchSummary s = summarize(records);
  EXPECT_EQ(s.timeouts, 1u);
  if (records[0].outcome == BenchOutcome::Ok) {
    EXPECT_DOUBLE_EQ(s.mean_ok_ms, records[0].ms);
  }

  std::ostringstream out;
  write_bench_csv(out, records);
  EXPECT_NE(out.str().find(",timeout,,\n"), std::string::npos) << out.str();
}

TEST(Bench, AlternativeCapIsLimit) {
  BenchConfig config;
  config.max_alternatives = 1;
  const auto records = run_bench(
      {measured_item(parse_formula("F[0,3] (p0 | p1)"))}, config);
  EXPECT_EQ(records[0].outcome, BenchOutcome::Limit);
}

TEST(Bench, CsvQuotesSpecialCharacters) {
  BenchRecord r;
  r.formula = "p0 | \"x\",y";
  r.alternatives = 1;
  r.length = 1;
  std::ostringstream out;
  write_bench_csv(out, {r});
  EXPECT_NE(out.str().find("\"p0 | \"\"x\"\",y\",0,0,0,0.000,ok,1,1\n"),
            std::string::npos)
      << out.str();
}

} // namespace
} // namespace west
