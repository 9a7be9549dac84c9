#include "vomas/cli.hpp"
#include "vomas/trace/report.hpp"
#include "vomas/trace/writer.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace vomas::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const Args& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> files_with(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ext) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("vomas_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }
  std::string out(const std::string& sub = "out") const { return (dir_ / sub).string(); }

  fs::path dir_;
};

const std::string kSpecs = VOMAS_SPECS_DIR;

TEST_F(CliTest, ResearchersWithEmptySpecExitsZero) {
  const auto r = invoke({"run", "--model", "researchers", "--ticks", "20", "--out", out()});
  EXPECT_EQ(r.code, Exit::ok) << r.err;
  EXPECT_EQ(files_with(out(), ".trace").size(), 1u);
  EXPECT_EQ(files_with(out(), ".report").size(), 1u);
  EXPECT_TRUE(files_with(out(), ".tmp").empty());
}

TEST_F(CliTest, ZeroTicksIsAUsageError) {
  const auto r = invoke({"run", "--model", "researchers", "--ticks", "0", "--out", out()});
  EXPECT_EQ(r.code, Exit::usage);
  EXPECT_NE(r.err.find("--ticks"), std::string::npos);
  EXPECT_FALSE(fs::exists(out()));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, Exit::usage);
  EXPECT_EQ(invoke({"fly"}).code, Exit::usage);
  EXPECT_EQ(invoke({"run", "--ticks", "3"}).code, Exit::usage);
  EXPECT_EQ(invoke({"run", "--model", "gridlock", "--out", out()}).code, Exit::usage);
  EXPECT_EQ(invoke({"run", "--model", "researchers", "--param", "p_conf=2", "--out", out()}).code, Exit::usage);
  EXPECT_EQ(invoke({"run", "--model", "researchers", "--param", "oops", "--out", out()}).code, Exit::usage);
  EXPECT_EQ(invoke({"run", "--model", "researchers", "--spec", write("bad.vomas", "watch = 3").string(), "--out", out()})
                .code,
            Exit::usage);
  EXPECT_EQ(invoke({"run", "--model", "researchers", "--spec", (dir_ / "missing.vomas").string()}).code, Exit::usage);
  EXPECT_EQ(invoke({"run", "--help"}).code, Exit::ok);
}

TEST_F(CliTest, SpecDiagnosticNamesFileAndPosition) {
  const auto spec = write("bad.vomas", "watch w = count(agents)\ninvariant i: count(agents)\n");
  const auto r = invoke({"run", "--model", "researchers", "--spec", spec.string(), "--out", out()});
  EXPECT_EQ(r.code, Exit::usage);
  EXPECT_NE(r.err.find("bad.vomas:2:"), std::string::npos) << r.err;
}

TEST_F(CliTest, LoneWolfHaltExitsThree) {
  const auto r = invoke({"run", "--model", "wolfsheep", "--spec", kSpecs + "/wolfsheep.vomas", "--ticks", "100", "--seed",
                         "3", "--out", out(), "--param", "n_sheep=0", "--param", "n_wolves=1", "--param",
                         "wolf_energy=3", "--param", "wolf_repro=0"});
  EXPECT_EQ(r.code, Exit::violations) << r.err;
  const auto reports = files_with(out(), ".report");
  ASSERT_EQ(reports.size(), 1u);
  const auto report = trace::parse_report(slurp(reports[0]));
  EXPECT_EQ(report.status, trace::RunStatus::halted);
  EXPECT_EQ(report.final_tick, 3);
  EXPECT_NE(r.out.find("[3] VIOLATION wolves_alive"), std::string::npos);
}

TEST_F(CliTest, ConfigFileSuppliesDefaultsAndFlagsOverride) {
  const auto conf = write("ws.conf", "n_sheep = 0\nn_wolves = 0\n");
  ASSERT_EQ(invoke({"run", "--model", "wolfsheep", "--config", conf.string(), "--param", "n_wolves=2", "--ticks", "1",
                    "--out", out()})
                .code,
            Exit::ok);
  const auto report = trace::parse_report(slurp(files_with(out(), ".report").at(0)));
  EXPECT_NE(report.params.find("n_sheep=0"), std::string::npos);
  EXPECT_NE(report.params.find("n_wolves=2"), std::string::npos);
  EXPECT_EQ(invoke({"run", "--model", "wolfsheep", "--config", (dir_ / "none.conf").string(), "--out", out()}).code,
            Exit::usage);
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const Args args{"run", "--model", "wolfsheep", "--spec", kSpecs + "/wolfsheep.vomas", "--ticks", "30", "--seed", "9",
                  "--full-state", "--frames", "5", "--out", out()};
  ASSERT_EQ(invoke(args).code, Exit::ok);
  const auto trace_file = files_with(out(), ".trace").at(0);
  const auto first = slurp(trace_file);
  ASSERT_EQ(invoke(args).code, Exit::ok);
  EXPECT_EQ(slurp(trace_file), first);
  EXPECT_EQ(files_with(out(), ".trace").size(), 1u);
}

TEST_F(CliTest, CheckReproducesLiveViolations) {
  const Args run{"run", "--model", "researchers", "--spec", kSpecs + "/researchers.vomas", "--ticks", "8", "--seed",
                 "2", "--full-state", "--out", out()};
  const int live = invoke(run).code;
  EXPECT_EQ(live, Exit::violations);
  const auto trace_file = files_with(out(), ".trace").at(0);
  const auto r = invoke({"check", "--trace", trace_file.string(), "--spec", kSpecs + "/researchers.vomas"});
  EXPECT_EQ(r.code, live) << r.err;
  EXPECT_NE(r.out.find("journal_ten_pubs  1           8"), std::string::npos) << r.out;
  fs::path check = trace_file;
  check.replace_extension(".check");
  const auto checked = trace::parse_report(slurp(check));
  const auto recorded = trace::parse_report(slurp(files_with(out(), ".report").at(0)));
  EXPECT_EQ(checked, recorded);
}

TEST_F(CliTest, StricterSpecFindsSupersetOfViolations) {
  const auto base = write("base.vomas", "invariant few: count(agents[pubs >= 3]) < 4\n");
  const auto strict = write("strict.vomas", "invariant few: count(agents[pubs >= 3]) < 4\ninvariant none: count(agents[pubs >= 2]) < 2\n");
  ASSERT_EQ(invoke({"run", "--model", "researchers", "--ticks", "12", "--full-state", "--spec", base.string(), "--out", out()})
                .code,
            Exit::violations);
  const auto trace_file = files_with(out(), ".trace").at(0).string();
  ASSERT_EQ(invoke({"check", "--trace", trace_file, "--spec", base.string()}).code, Exit::violations);
  fs::path check = trace_file;
  check.replace_extension(".check");
  const auto loose = trace::parse_report(slurp(check));
  ASSERT_EQ(invoke({"check", "--trace", trace_file, "--spec", strict.string()}).code, Exit::violations);
  const auto tight = trace::parse_report(slurp(check));
  for (const auto& v : loose.violations) {
    EXPECT_NE(std::find(tight.violations.begin(), tight.violations.end(), v), tight.violations.end());
  }
  EXPECT_GT(tight.violations.size(), loose.violations.size());
}

TEST_F(CliTest, CheckFailureModes) {
  EXPECT_EQ(invoke({"check", "--trace", (dir_ / "nope.trace").string()}).code, Exit::abort);
  ASSERT_EQ(invoke({"run", "--model", "researchers", "--ticks", "3", "--out", out()}).code, Exit::ok);
  const auto lean = files_with(out(), ".trace").at(0).string();
  const auto r = invoke({"check", "--trace", lean});
  EXPECT_EQ(r.code, Exit::abort);
  EXPECT_NE(r.err.find("--full-state"), std::string::npos);
  const auto corrupt = write("corrupt.trace", "{\"kind\":\n");
  EXPECT_EQ(invoke({"check", "--trace", corrupt.string()}).code, Exit::abort);
}

TEST_F(CliTest, SweepRunsTheCartesianProduct) {
  const Args args{"sweep",   "--model",   "researchers", "--spec", kSpecs + "/researchers.vomas", "--ticks", "5",
                  "--param", "p_journal=0.1..0.3:0.1", "--seeds", "2", "--jobs", "3", "--out", out()};
  const auto r = invoke(args);
  EXPECT_EQ(r.code, Exit::violations) << r.err;
  EXPECT_EQ(files_with(out(), ".trace").size(), 6u);
  EXPECT_EQ(files_with(out(), ".report").size(), 6u);
  const auto summary = slurp(fs::path(out()) / "sweep.summary");
  EXPECT_NE(summary.find(R"("violations":6)"), std::string::npos) << summary;
  for (const char* point : {"p_journal=0.1", "p_journal=0.2", "p_journal=0.3"}) {
    EXPECT_NE(summary.find(point), std::string::npos) << point;
  }
  EXPECT_EQ(invoke(args).code, Exit::violations);
  EXPECT_EQ(slurp(fs::path(out()) / "sweep.summary"), summary);
}

TEST_F(CliTest, SweepSerialAndParallelAgree) {
  Args args{"sweep", "--model", "wolfsheep", "--spec", kSpecs + "/wolfsheep.vomas", "--ticks", "15", "--param",
            "n_wolves=1..3:1", "--seeds", "3", "--out", out("a"), "--jobs", "1"};
  invoke(args);
  args[args.size() - 3] = out("b");
  args.back() = "8";
  invoke(args);
  EXPECT_EQ(slurp(fs::path(out("a")) / "sweep.summary"), slurp(fs::path(out("b")) / "sweep.summary"));
}

TEST_F(CliTest, MalformedRangeNamesTheFlag) {
  for (const char* bad : {"p_journal=0.3..0.1:0.1", "p_journal=0.1..0.3", "p_journal=a..b:c", "p_journal=0..1:0"}) {
    const auto r = invoke({"sweep", "--model", "researchers", "--param", bad, "--out", out()});
    EXPECT_EQ(r.code, Exit::usage) << bad;
    EXPECT_NE(r.err.find(bad), std::string::npos) << r.err;
  }
}

TEST_F(CliTest, ReportTabulatesSortedRuns) {
  invoke({"sweep", "--model", "researchers", "--spec", kSpecs + "/researchers.vomas", "--ticks", "5", "--param",
          "p_conf=0.1..0.3:0.1", "--seeds", "2", "--out", out()});
  invoke({"run", "--model", "wolfsheep", "--spec", kSpecs + "/wolfsheep.vomas", "--ticks", "10", "--out", out(),
          "--param", "n_wolves=0"});
  const auto r = invoke({"report", "--out", out()});
  ASSERT_EQ(r.code, Exit::ok) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].rfind("run_id", 0), 0u);
  EXPECT_TRUE(std::is_sorted(rows.begin() + 1, rows.end()));
  EXPECT_NE(r.out.find("halted"), std::string::npos);
  EXPECT_NE(r.out.find("completed"), std::string::npos);
  const auto summary = slurp(fs::path(out()) / "summary.txt");
  EXPECT_EQ(summary, r.out);
  EXPECT_EQ(invoke({"report", "--out", out()}).out, summary);
}

TEST_F(CliTest, ReportNeedsReports) {
  fs::create_directories(out());
  EXPECT_EQ(invoke({"report", "--out", out()}).code, Exit::usage);
  EXPECT_EQ(invoke({"report", "--out", (dir_ / "absent").string()}).code, Exit::usage);
}

TEST(Table, AlignsColumns) {
  EXPECT_EQ(format_table({{"a", "bb"}, {"ccc", "d"}}), "a    bb\nccc  d\n");
}

}  // namespace
}  // namespace vomas::cli
