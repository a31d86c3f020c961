#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/cli.hpp"
#include "cli/state_file.hpp"
#include "conclab/conclab.hpp"

namespace conclab::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("CONCURRENCE_LAB_SEED");
    dir_ = fs::temp_directory_path() /
           ("conclab_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv("CONCURRENCE_LAB_SEED");
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string gen(const std::string& name, std::vector<std::string> args) {
    args.insert(args.begin(), "gen");
    args.push_back("--out");
    args.push_back(path(name));
    const Outcome o = run_cli(args);
    EXPECT_EQ(o.code, 0) << o.err;
    return path(name);
  }
  void write(const std::string& name, const std::string& text) {
    std::ofstream(path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, BellPureAnalysis) {
  const std::string f = gen("bell.json", {"--family", "bell", "--param", "d=2"});
  const Outcome o = run_cli({"pure-analyze", f, "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  EXPECT_NEAR(j["entropy_bits"].get<double>(), 1.0, 1e-14);
  EXPECT_NEAR(j["concurrence_norm_squared"].get<double>(), 1.0, 1e-14);
  EXPECT_EQ(j["schmidt_rank"].get<int>(), 2);

  const Outcome text = run_cli({"pure-analyze", f});
  EXPECT_NE(text.out.find("entropy_bits: 1\n"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("concurrence_norm_squared: 1\n"), std::string::npos);
}

TEST_F(CliTest, WernerSeparabilityExitCodes) {
  const std::string ent = gen("w09.json", {"--family", "werner2", "--param", "p=0.9"});
  const std::string sep = gen("w02.json", {"--family", "werner2", "--param", "p=0.2"});
  EXPECT_EQ(run_cli({"separability", ent, "--seed", "0"}).code, kExitEntangled);
  const Outcome o = run_cli({"separability", sep, "--format", "json"});
  EXPECT_EQ(o.code, kExitSeparable) << o.out;
  const json j = json::parse(o.out);
  EXPECT_EQ(j["verdict"], "SeparableNumerical");
  EXPECT_EQ(j["m"], 16);
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_TRUE(run_cli({"separability", sep, "--format", "json", "--timing"})
                  .out.find("wall_seconds") != std::string::npos);
}

TEST_F(CliTest, InconclusiveExitCode) {
  const std::string f = gen("w05.json", {"--family", "werner2", "--param", "p=0.5"});
  // The werner2(0.5) minimum is about 2e-3; this threshold puts it in the band.
  EXPECT_EQ(run_cli({"separability", f, "--threshold", "0.001"}).code, kExitInconclusive);
}

TEST_F(CliTest, OracleCommands) {
  const std::string bell = gen("bell.json", {"--family", "bell"});
  const Outcome w = run_cli({"oracle-wootters", bell});
  EXPECT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(w.out, "concurrence: 1\n");
  const Outcome p = run_cli({"oracle-ppt", bell, "--format", "json"});
  const json j = json::parse(p.out);
  EXPECT_NEAR(j["min_eigenvalue"].get<double>(), -0.5, 1e-14);
  EXPECT_TRUE(j["npt"].get<bool>());
}

TEST_F(CliTest, OperatorCommands) {
  const std::string bell = gen("bell.json", {"--family", "bell"});
  const Outcome b = run_cli({"biconc", bell, "--m", "4", "--format", "json"});
  ASSERT_EQ(b.code, 0) << b.err;
  const json j = json::parse(b.out);
  EXPECT_EQ(j["m"], 4);
  EXPECT_NEAR(j["diag_trace_identity"].get<double>(), 0.5, 1e-15);
  EXPECT_EQ(j["entries"].size(), 256u);

  const Outcome p = run_cli({"preconcurrence", bell, "--format", "json"});
  ASSERT_EQ(p.code, 0) << p.err;
  const json t = json::parse(p.out);
  ASSERT_EQ(t["entries"].size(), 1u);
  EXPECT_NEAR(t["entries"][0]["value"][0].get<double>(), 1.0, 1e-15);

  const std::string rd = gen("r.json", {"--family", "random_density", "--param", "rank=2"});
  EXPECT_EQ(run_cli({"rank2", rd}).code, 0);
  EXPECT_EQ(run_cli({"witness2q", rd, "--budget", "50"}).code, 0);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "--family", "nope"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "--family", "werner2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gen", "--family", "werner2", "--param", "p"}).code, kExitUsage);
  const std::string bell = gen("bell.json", {"--family", "bell"});
  EXPECT_EQ(run_cli({"separability", bell, "--starts", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"separability", bell, "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"oracle-ppt"}).code, kExitUsage);
}

TEST_F(CliTest, SchemaErrors) {
  EXPECT_EQ(run_cli({"oracle-ppt", path("missing.json")}).code, kExitSchema);
  write("short.json", R"({"kind": "pure", "dims": [2, 3], "data": [[1,0],[0,0],[0,0],[0,0],[0,0]]})");
  const Outcome o = run_cli({"pure-analyze", path("short.json")});
  EXPECT_EQ(o.code, kExitSchema);
  EXPECT_NE(o.err.find("'data'"), std::string::npos) << o.err;
  const std::string w = gen("w.json", {"--family", "werner2", "--param", "p=0.5"});
  EXPECT_EQ(run_cli({"pure-analyze", w}).code, kExitSchema);
  EXPECT_EQ(run_cli({"oracle-wootters", gen("t.json", {"--family", "tiles_upb"})}).code,
            kExitSchema);
}

TEST_F(CliTest, ComputationErrors) {
  const std::string w = gen("w.json", {"--family", "werner2", "--param", "p=0.5"});
  const Outcome o = run_cli({"rank2", w});
  EXPECT_EQ(o.code, kExitComputation);
  EXPECT_NE(o.err.find("RankTooHigh"), std::string::npos) << o.err;
  EXPECT_EQ(run_cli({"separability", w, "--m", "2"}).code, kExitComputation);
}

TEST_F(CliTest, GenRoundTripIsByteIdentical) {
  for (const auto& family :
       std::vector<std::vector<std::string>>{{"--family", "intro_phi"},
                                             {"--family", "random_density", "--param", "da=3"},
                                             {"--family", "tiles_upb"}}) {
    const std::string f = gen("rt.json", family);
    const std::string bytes = slurp(f);
    EXPECT_EQ(format_state_json(parse_state_file(f)), bytes);
    const Outcome stdout_copy = run_cli([&] {
      auto a = family;
      a.insert(a.begin(), "gen");
      return a;
    }());
    EXPECT_EQ(stdout_copy.out, bytes);
  }
}

TEST_F(CliTest, ReportsAreReproducible) {
  const std::string f =
      gen("r.json", {"--family", "random_density", "--param", "rank=3", "--param", "seed=4"});
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"separability", f, "--format", "json", "--verbose", "--starts", "3"},
           {"separability", f, "--threads", "2", "--starts", "3"},
           {"witness2q", f, "--budget", "100", "--seed", "7", "--format", "json"},
           {"biconc", f, "--format", "json"}}) {
    const Outcome a = run_cli(cmd);
    const Outcome b = run_cli(cmd);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST_F(CliTest, SeedFromEnvironment) {
  const std::string f = gen("r.json", {"--family", "random_density", "--param", "rank=2"});
  const Outcome explicit_seed = run_cli({"witness2q", f, "--budget", "20", "--seed", "3", "--format", "json"});
  setenv("CONCURRENCE_LAB_SEED", "3", 1);
  const Outcome env_seed = run_cli({"witness2q", f, "--budget", "20", "--format", "json"});
  EXPECT_EQ(explicit_seed.out, env_seed.out);
  setenv("CONCURRENCE_LAB_SEED", "three", 1);
  EXPECT_EQ(run_cli({"witness2q", f}).code, kExitUsage);
}

TEST_F(CliTest, HelpListsEveryCommand) {
  const Outcome o = run_cli({"--help"});
  EXPECT_EQ(o.code, 0);
  for (const char* cmd : {"gen", "pure-analyze", "preconcurrence", "biconc", "separability",
                          "rank2", "witness2q", "oracle-ppt", "oracle-wootters"}) {
    EXPECT_NE(o.out.find(cmd), std::string::npos) << cmd;
  }
}

// Flags mentioned in the README must exist in --help and vice versa.
TEST_F(CliTest, ReadmeFlagsMatchHelp) {
  const std::string readme = slurp(fs::path(CONCLAB_SOURCE_DIR) / "README.md");
  ASSERT_FALSE(readme.empty());
  const std::regex flag("--[a-z][a-z0-9-]*");
  auto flags_in = [&](const std::string& text) {
    std::set<std::string> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), flag);
         it != std::sregex_iterator(); ++it) {
      out.insert(it->str());
    }
    return out;
  };
  std::string help;
  for (const char* cmd : {"gen", "pure-analyze", "preconcurrence", "biconc", "separability",
                          "rank2", "witness2q", "oracle-ppt", "oracle-wootters"}) {
    const Outcome o = run_cli({cmd, "--help"});
    EXPECT_EQ(o.code, 0) << cmd;
    help += o.out;
  }
  const auto in_help = flags_in(help);
  // Build-system flags in the README are not CLI flags.
  std::set<std::string> in_readme;
  for (const auto& f : flags_in(readme)) {
    if (f != "--build" && f != "--test-dir" && f != "--output-on-failure" &&
        f != "--install" && f != "--prefix" && f != "--only") {
      in_readme.insert(f);
    }
  }
  for (const auto& f : in_readme) EXPECT_TRUE(in_help.count(f)) << f << " missing from --help";
  for (const auto& f : in_help) EXPECT_TRUE(in_readme.count(f)) << f << " missing from README";
}

}  // namespace
}  // namespace conclab::cli
