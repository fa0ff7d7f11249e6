#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace hypercert::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hypercert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<double> numbers_in(const std::string& s) {
  static const std::regex number(R"((?:^|[\s,(\[:"])([-+]?\d+\.?\d*(?:[eE][-+]?\d+)?))");
  std::vector<double> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), number); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stod((*it)[1].str()));
  }
  return out;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST(CliEval, ClosedFormValue) {
  const auto o = invoke({"eval", "--u", "1", "--v", "1", "--w", "2", "--z", "0.5", "0"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("1.38629436111"), std::string::npos) << o.out;
}

TEST(CliEval, ValueAtOrigin) {
  const auto o = invoke({"eval", "--u", "1", "--v", "1", "--w", "2", "--z", "0", "0", "--format", "json"});
  EXPECT_EQ(o.code, kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["value"][0].get<double>(), 1.0);
  EXPECT_EQ(j["value"][1].get<double>(), 0.0);
}

TEST(CliEval, PoleIsAnError) {
  const auto o = invoke({"eval", "--u", "1", "--v", "1", "--w", "0", "--z", "0.1", "0"});
  EXPECT_EQ(o.code, kExitError);
  EXPECT_NE(o.err.find("nonpositive integer"), std::string::npos);
}

TEST(CliEval, FunctionalKinds) {
  const auto o = invoke({"eval", "--u", "0.1", "--v", "0.1", "--w", "5", "--z", "0.3", "0.2", "--kind",
                         "exp-convex"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(invoke({"eval", "--u", "1", "--v", "1", "--w", "2", "--z", "0.5", "0", "--kind", "nope"}).code,
            kExitUsage);
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--u", "1", "--v", "1", "--w", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--u", "x", "--v", "1", "--w", "2", "--z", "0", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliEval, RadiusOutsideRange) {
  EXPECT_EQ(invoke({"eval", "--u", "1", "--v", "1", "--w", "2", "--z", "0.995", "0"}).code, kExitError);
  EXPECT_EQ(invoke({"--r-max", "1.5", "eval", "--u", "1", "--v", "1", "--w", "2", "--z", "0", "0"}).code,
            kExitUsage);
}

TEST(CliConfig, ToleranceRange) {
  const std::vector<std::string> tail = {"eval", "--u", "1", "--v", "1", "--w", "2", "--z", "0.5", "0"};
  auto with = [&](std::string tol) {
    std::vector<std::string> a = {"--tol", tol};
    a.insert(a.end(), tail.begin(), tail.end());
    return invoke(a).code;
  };
  EXPECT_EQ(with("1e-6"), kExitOk);
  EXPECT_EQ(with("1e-14"), kExitOk);
  EXPECT_EQ(with("1e-5"), kExitUsage);
  EXPECT_EQ(with("0"), kExitUsage);
  EXPECT_EQ(with("-1e-9"), kExitUsage);
}

TEST(CliConfig, EnvironmentOverrides) {
  const std::vector<std::string> args = {"eval", "--u", "0.5", "--v", "0.5", "--w", "1.5", "--z", "0.9", "0",
                                         "--format", "json"};
  const auto base = nlohmann::json::parse(invoke(args).out);
  {
    ScopedEnv env("HYPERCERT_TOL", "1e-6");
    const auto loose = nlohmann::json::parse(invoke(args).out);
    EXPECT_LT(loose["terms_used"].get<int>(), base["terms_used"].get<int>());
  }
  {
    ScopedEnv env("HYPERCERT_MAX_TERMS", "5");
    EXPECT_EQ(invoke(args).code, kExitError);
  }
  {
    ScopedEnv env("HYPERCERT_TOL", "1");
    EXPECT_EQ(invoke(args).code, kExitUsage);
  }
}

TEST(CliCertify, ExitCodes) {
  EXPECT_EQ(invoke({"certify", "h1", "--u", "0.1", "--v", "0.1", "--w", "5"}).code, kExitOk);
  const auto h2 = invoke({"certify", "h2", "--u", "0.1", "--v", "0.1", "--w", "10"});
  EXPECT_EQ(h2.code, kExitNegative);
  EXPECT_NE(h2.out.find("h2_v"), std::string::npos);
  EXPECT_EQ(invoke({"certify", "janowski-convex", "--u", "0", "--v", "0", "--w", "1", "--C", "0.5", "--D",
                    "0"})
                .code,
            kExitNegative);
  EXPECT_EQ(invoke({"certify", "janowski-convex", "--u", "0", "--v", "0", "--w", "1", "--C", "0", "--D",
                    "0.5"})
                .code,
            kExitError);
  EXPECT_EQ(invoke({"certify", "janowski-convex", "--u", "0", "--v", "0", "--w", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"certify", "h9", "--u", "0", "--v", "0", "--w", "1"}).code, kExitUsage);
}

TEST(CliCertify, FormatsCarryIdenticalNumbers) {
  const std::vector<std::string> args = {"certify", "janowski-starlike", "--u", "-0.4", "--v", "1.3", "--w",
                                         "3.5", "--C", "0.75", "--D", "-0.5"};
  auto with = [&](const char* format) {
    auto a = args;
    a.push_back("--format");
    a.push_back(format);
    return invoke(a);
  };
  const auto text = with("text");
  const auto json = with("json");
  const auto csv = with("csv");
  EXPECT_EQ(text.code, json.code);
  EXPECT_EQ(text.code, csv.code);
  // Notes are prose; compare the numeric fields only.
  const auto notes = text.out.find("interpretation_notes:");
  const auto subs = text.out.find("sub_results:");
  ASSERT_LT(notes, subs);
  auto a = numbers_in(text.out.substr(0, notes) + text.out.substr(subs));
  auto parsed = nlohmann::json::parse(json.out);
  parsed.erase("interpretation_notes");
  auto b = numbers_in(parsed.dump());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  // CSV has one row per sub-result carrying lhs, rhs and margin.
  const auto j = nlohmann::json::parse(json.out);
  for (const auto& s : j["sub_results"]) {
    if (!s["margin"].is_number()) continue;
    EXPECT_NE(csv.out.find(s["id"].get<std::string>() + ","), std::string::npos);
  }
  EXPECT_NE(csv.out.find("overall"), std::string::npos);
}

TEST(CliVerify, ExitCodes) {
  const std::vector<std::string> grid = {"--radii", "8", "--angles", "64"};
  auto verify = [&](std::vector<std::string> a) {
    a.insert(a.begin(), grid.begin(), grid.end());
    return invoke(a);
  };
  const auto ok = verify({"verify", "function", "--u", "0.1", "--v", "0.1", "--w", "5", "--target", "exp-disk"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_NE(ok.out.find("grid evidence only"), std::string::npos);
  const auto bad = verify({"verify", "function", "--u", "2", "--v", "2", "--w", "2.5", "--target", "exp-disk"});
  EXPECT_EQ(bad.code, kExitNegative);
  // Not certified by the first condition set, so this is not a counterexample.
  EXPECT_EQ(bad.err.find("COUNTEREXAMPLE"), std::string::npos);
  EXPECT_EQ(verify({"verify", "exp-convex", "--u", "-3", "--v", "1", "--w", "10", "--target", "exp-disk"}).code,
            kExitOk);
  EXPECT_EQ(verify({"verify", "janowski-convex", "--u", "0", "--v", "0", "--w", "1", "--target", "exp-disk"}).code,
            kExitUsage);
  EXPECT_EQ(verify({"verify", "janowski-convex", "--u", "0.1", "--v", "0.1", "--w", "5", "--target", "janowski",
                    "--C", "1", "--D", "-1"})
                .code,
            kExitOk);
}

TEST(CliVerify, DenominatorAlertsOnly) {
  // u = v = 0 makes F constant, so F' vanishes at every grid point.
  const auto o = invoke({"--radii", "2", "--angles", "8", "verify", "janowski-convex", "--u", "0", "--v", "0",
                         "--w", "2", "--target", "janowski", "--C", "1", "--D", "-1"});
  EXPECT_EQ(o.code, kExitDenominator) << o.out;
  EXPECT_NE(o.out.find("denominator_alerts"), std::string::npos);
}

TEST(CliCrosscheck, DeterministicPerSeed) {
  const auto a = invoke({"crosscheck", "--seed", "42", "--samples", "10"});
  const auto b = invoke({"crosscheck", "--seed", "42", "--samples", "10"});
  EXPECT_EQ(a.code, kExitOk) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto c = invoke({"crosscheck", "--seed", "43", "--samples", "10"});
  EXPECT_NE(a.out, c.out);
}

TEST(CliCrosscheck, SubsetReproducesFullRun) {
  const auto all = invoke({"crosscheck", "--seed", "7", "--samples", "10", "--format", "csv"});
  const auto one = invoke({"crosscheck", "--seed", "7", "--samples", "10", "--format", "csv", "--suite", "euler"});
  ASSERT_EQ(all.code, kExitOk);
  std::istringstream lines(one.out);
  std::string line;
  std::getline(lines, line);  // header
  std::getline(lines, line);
  EXPECT_NE(all.out.find(line), std::string::npos) << line;
  EXPECT_EQ(invoke({"crosscheck", "--suite", "nope"}).code, kExitUsage);
}

TEST(CliScan, FeasibleAndEmpty) {
  const auto yes = invoke({"scan", "h2", "--range", "u=-4:0:41", "--range", "v=0:2:21", "--range", "w=5:15:21"});
  EXPECT_EQ(yes.code, kExitOk);
  EXPECT_EQ(yes.out.rfind("u,v,w,h2_i_holds", 0), 0u);
  EXPECT_NE(yes.err.find("feasible"), std::string::npos);
  const auto no = invoke({"scan", "h2", "--range", "u=0.01:2:20", "--range", "v=0.01:2:20", "--range",
                          "w=1:50:50"});
  EXPECT_EQ(no.code, kExitNegative);
}

TEST(CliScan, MalformedRanges) {
  for (const char* r : {"u=1:2", "u=a:b:3", "u=0:1:1", "u=1:0:5", "q=0:1:3", "u0:1:3"}) {
    EXPECT_EQ(invoke({"scan", "h1", "--range", r, "--range", "v=0:1:2", "--range", "w=1:2:2"}).code, kExitUsage)
        << r;
  }
  EXPECT_EQ(invoke({"scan", "h1", "--range", "u=0:1:2", "--range", "w=1:2:2"}).code, kExitUsage);
}

TEST(CliScan, OutputFileAndPlotData) {
  const auto dir = std::filesystem::temp_directory_path() / "hypercert_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "scan.csv").string();
  const auto plot = (dir / "scan.dat").string();
  const auto o = invoke({"-o", csv, "scan", "h1", "--range", "u=-1:1:5", "--range", "v=-1:1:5", "--range",
                         "w=4:6:3", "--plot-data", plot, "--verify", "--radii", "4", "--angles", "16"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("feasible"), std::string::npos);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_TRUE(header.ends_with("overall,verified,min_margin,violations")) << header;
  EXPECT_TRUE(std::filesystem::exists(plot));
  std::filesystem::remove_all(dir);
}

TEST(CliScan, JanowskiPairs) {
  const auto o = invoke({"scan", "janowski-convex", "--range", "u=0:1:2", "--range", "v=0:1:2", "--range",
                         "w=1:2:2", "--pair", "0.5:0", "--pair", "1:-1"});
  EXPECT_TRUE(o.code == kExitOk || o.code == kExitNegative);
  EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 1 + 8 * 2);
  EXPECT_EQ(invoke({"scan", "janowski-convex", "--range", "u=0:1:2", "--range", "v=0:1:2", "--range", "w=1:2:2",
                    "--pair", "0.5"})
                .code,
            kExitUsage);
}

}  // namespace
}  // namespace hypercert::cli
