#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vip/cli.hpp"

namespace fs = std::filesystem;
using vip::cli::Json;
using vip::cli::run;

namespace {

struct Case {
  std::string name;
  int exit_code;
  std::vector<std::string> args;
};

std::vector<Case> load_cases() {
  std::ifstream in(std::string(VIP_GOLDEN_DIR) + "/cases.tsv");
  std::vector<Case> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Case c;
    std::string code, rest;
    std::getline(ls, c.name, '\t');
    std::getline(ls, code, '\t');
    std::getline(ls, rest);
    c.exit_code = std::stoi(code);
    std::istringstream words(rest);
    for (std::string w; words >> w;) c.args.push_back(w);
    out.push_back(c);
  }
  return out;
}

// Results are compared with the problem path reduced to its file name.
std::vector<std::string> with_sample_paths(std::vector<std::string> args) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--problem") args[i + 1] = std::string(VIP_SAMPLES_DIR) + "/" + args[i + 1];
  return args;
}

Json normalized(const std::string& out) {
  Json j = Json::parse(out);
  if (j.contains("options") && j["options"].contains("problem"))
    j["options"]["problem"] = fs::path(j["options"]["problem"].get<std::string>()).filename().string();
  return j;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, GoldenReports) {
  const bool update = std::getenv("VIP_UPDATE_GOLDEN") != nullptr;
  auto cases = load_cases();
  ASSERT_GE(cases.size(), 10u);
  for (const auto& c : cases) {
    SCOPED_TRACE(c.name);
    auto o = run(with_sample_paths(c.args));
    EXPECT_EQ(o.exit_code, c.exit_code) << o.err;
    Json got = normalized(o.out);
    fs::path golden = fs::path(VIP_GOLDEN_DIR) / (c.name + ".json");
    if (update) {
      std::ofstream(golden) << got.dump(2) << "\n";
      continue;
    }
    ASSERT_TRUE(fs::exists(golden)) << golden;
    EXPECT_EQ(got.dump(2) + "\n", slurp(golden));
  }
}

TEST(Cli, ThreeConditionExitCodeAndPayload) {
  auto o = run(with_sample_paths({"interp", "check", "--problem", "paper_example.vip", "--json"}));
  EXPECT_EQ(o.exit_code, 10);
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["result"]["verdict"], "NOT_EXISTS");
  EXPECT_EQ(j["result"]["samuel"], "6/1");
  EXPECT_EQ(j["result"]["target"], "5/1");
}

TEST(Cli, EstimateOnKw) {
  auto o = run(with_sample_paths({"samuel", "--estimate", "40", "--problem", "kw.vip", "--ideal", "m", "--json"}));
  ASSERT_EQ(o.exit_code, 0) << o.err;
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["result"]["lower"], "1/2");
  EXPECT_EQ(j["result"]["at_k"], 2);
}

TEST(Cli, LctWithoutQ) {
  auto o = run(with_sample_paths({"lct", "--problem", "madic.vip", "--json"}));
  ASSERT_EQ(o.exit_code, 0) << o.err;
  EXPECT_EQ(Json::parse(o.out)["result"]["value"], "2/1");
}

TEST(Cli, HumanOutput) {
  auto o = run(with_sample_paths({"interp", "check", "--problem", "paper_example.vip"}));
  EXPECT_EQ(o.exit_code, 10);
  EXPECT_NE(o.out.find("NOT_EXISTS"), std::string::npos);
  EXPECT_THROW(Json::parse(o.out), nlohmann::json::parse_error);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"order", "--problem", "/nonexistent/file.vip"}).exit_code, 2);
  EXPECT_EQ(run({"order", "--bogus-flag"}).exit_code, 2);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run(with_sample_paths({"mult-ideal", "--problem", "kw.vip", "--lambda", "x"})).exit_code, 2);
  EXPECT_EQ(run(with_sample_paths({"samuel", "--problem", "kw.vip"})).exit_code, 2);
  EXPECT_EQ(run(with_sample_paths({"skoda", "--problem", "kw.vip", "--ideal", "m", "--m", "1"})).exit_code, 2);

  fs::path bad = fs::temp_directory_path() / "vip_cli_bad.vip";
  std::ofstream(bad) << "vars x y\nideal a = (x, q)\n";
  auto o = run({"interp", "check", "--problem", bad.string()});
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_NE(o.err.find("line 2"), std::string::npos);
  fs::remove(bad);
}

TEST(Cli, ThreadsAndTimingDoNotChangeReport) {
  auto base = with_sample_paths({"interp", "infinite", "--problem", "constant.vip", "--rmax", "4", "--kmax", "4",
                                 "--json", "--seed", "1"});
  auto a = run(base);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(a.out, run(threaded).out);
  auto timed = base;
  timed.push_back("--timing");
  Json t = Json::parse(run(timed).out);
  EXPECT_TRUE(t.contains("timing"));
  t.erase("timing");
  EXPECT_EQ(t.dump(2) + "\n", a.out);
}

TEST(Cli, Version) {
  auto o = run({"--version"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.out, std::string(vip::cli::kToolVersion) + "\n");
}
