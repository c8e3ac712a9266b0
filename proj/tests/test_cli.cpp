// Copyright 2026 The bosonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bosonlab/cli.hpp"
#include "bosonlab/errors.hpp"
#include "bosonlab/parallel.hpp"

namespace bosonlab::cli {
namespace {

using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bosonlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Shell {
  int code = 0;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = std::string(BOSONLAB_TOOL_PATH) + " " + args + " 2>/dev/null";
  Shell s;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) s.out.append(buf, n);
  const int status = pclose(pipe);
  s.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return s;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("bosonlab_" + std::to_string(::getpid()) + "_" + name);
}

TEST(RunConfig, JsonRoundTrip) {
  RunConfig c;
  c.subcommand = "reduction-demo";
  c.seed = 1234567890123ULL;
  c.threads = 2;
  c.out = "report.json";
  c.format = "text";
  c.flags = {{"modes", 2}, {"delta", 0.05}, {"precision", "extended"}, {"identity", true}};
  json j = c;
  EXPECT_EQ(json::parse(j.dump()).get<RunConfig>(), c);
}

TEST(RunConfig, FlagsOverrideConfigFile) {
  const auto path = temp_file("cfg.json");
  {
    std::ofstream f(path);
    f << json{{"subcommand", "balls-bins"}, {"modes", 64}, {"trials", 500}, {"seed", 3}}.dump();
  }
  const std::string p = path.string();
  std::vector<const char*> argv{"bosonlab", "--config", p.c_str(), "balls-bins",
                                "--trials", "1000"};
  ParseResult r = parse_command_line(static_cast<int>(argv.size()), argv.data());
  EXPECT_EQ(r.config.subcommand, "balls-bins");
  EXPECT_EQ(r.config.seed, 3u);
  EXPECT_EQ(r.config.flags.at("modes"), 64);
  EXPECT_EQ(r.config.flags.at("trials"), 1000);

  std::vector<const char*> argv2{"bosonlab", "--config", p.c_str(), "--seed", "9"};
  ParseResult r2 = parse_command_line(static_cast<int>(argv2.size()), argv2.data());
  EXPECT_EQ(r2.config.subcommand, "balls-bins");
  EXPECT_EQ(r2.config.seed, 9u);
  EXPECT_EQ(r2.config.flags.at("trials"), 500);
  std::filesystem::remove(path);
}

TEST(RunConfig, GlobalOptionsAfterSubcommand) {
  std::vector<const char*> argv{"bosonlab", "degree-check", "--seed", "5", "--format", "text"};
  ParseResult r = parse_command_line(static_cast<int>(argv.size()), argv.data());
  EXPECT_EQ(r.config.seed, 5u);
  EXPECT_EQ(r.config.format, "text");
}

TEST(Cli, HelpListsEverySubcommand) {
  Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  for (const char* name : {"collision-ratio", "birthday-bound", "balls-bins", "route-permutation",
                           "reduction-demo", "degree-check", "loss-check", "gbs-check"}) {
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  }
  EXPECT_EQ(subcommand_names().size(), 8u);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(invoke({"balls-bins", "--modes", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"balls-bins", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"route-permutation", "--modes", "6"}).code, kExitUsage);
  Result precision = invoke({"reduction-demo", "--precision", "double"});
  EXPECT_EQ(precision.code, kExitUsage);
  EXPECT_NE(precision.err.find("bits"), std::string::npos);
}

// With every channel certain to fire, no trajectory survives post-selection.
TEST(Cli, AssertionFailureExitsTwo) {
  Result r = invoke({"loss-check", "--rho", "1", "--samples", "500"});
  EXPECT_EQ(r.code, kExitAssertion);
  EXPECT_FALSE(json::parse(r.out).at("passed").get<bool>());
}

TEST(Cli, CollisionRatioCsvIsThreadIndependent) {
  const std::vector<std::string> base{"collision-ratio", "--modes", "16",   "--photons",
                                      "2,4",             "--reps",  "1,2",  "--circuits",
                                      "5",               "--samples", "30", "--seed", "11"};
  std::vector<std::string> one = base, three = base;
  one.insert(one.end(), {"--threads", "1"});
  three.insert(three.end(), {"--threads", "3"});
  Result a = invoke(one), b = invoke(three);
  configure_threads(std::nullopt);
  ASSERT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
            "ensemble,M,N,q,circuit,seed,cf_count,samples,ratio");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1 + 5 * 2 * 3);
}

TEST(Cli, CollisionRatioWritesOutFile) {
  const auto path = temp_file("ratio.csv");
  Result r = invoke({"collision-ratio", "--modes", "8", "--photons", "2", "--reps", "1",
                     "--circuits", "3", "--samples", "10", "--out", path.string()});
  ASSERT_EQ(r.code, kExitPass);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "ensemble,M,N,q,circuit,seed,cf_count,samples,ratio");
  std::filesystem::remove(path);
}

TEST(Cli, ReductionDemoReportKeys) {
  Result r = invoke({"reduction-demo", "--seed", "4"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  json j = json::parse(r.out);
  for (const char* key : {"extrapolated", "direct", "abs_error", "amplification", "degree"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_LT(j.at("abs_error").get<double>(), 1e-6);
  EXPECT_EQ(invoke({"reduction-demo", "--seed", "4"}).out, r.out);
}

TEST(Cli, TextFormat) {
  Result r = invoke({"route-permutation", "--modes", "4", "--perm", "2,3,4,1",
                     "--format", "text"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find(" = "), std::string::npos);
}

TEST(Cli, EveryCheckPassesAtSmallScale) {
  EXPECT_EQ(invoke({"birthday-bound", "--circuits", "30", "--samples", "50"}).code, kExitPass);
  EXPECT_EQ(invoke({"balls-bins", "--trials", "2000"}).code, kExitPass);
  EXPECT_EQ(invoke({"degree-check", "--modes", "2", "--photons", "1"}).code, kExitPass);
  EXPECT_EQ(invoke({"loss-check", "--samples", "20000"}).code, kExitPass);
  EXPECT_EQ(invoke({"gbs-check"}).code, kExitPass);
}

TEST(Threads, EnvironmentFallback) {
  ::setenv("BOSONLAB_THREADS", "3", 1);
  EXPECT_EQ(configure_threads(std::nullopt), 3);
  EXPECT_EQ(configure_threads(2), 2);
  ::setenv("BOSONLAB_THREADS", "many", 1);
  EXPECT_THROW(configure_threads(std::nullopt), ValidationError);
  ::unsetenv("BOSONLAB_THREADS");
  EXPECT_THROW(configure_threads(0), ValidationError);
  configure_threads(1);
}

TEST(Binary, RunsAndIsDeterministic) {
  Shell route = shell("route-permutation --modes 8 --perm 8,7,6,5,4,3,2,1");
  ASSERT_EQ(route.code, 0);
  EXPECT_EQ(json::parse(route.out).at("residual").get<double>(), 0.0);

  const std::string args =
      "collision-ratio --modes 8 --photons 2,3 --reps 1 --circuits 4 --samples 20 --seed 2";
  Shell a = shell(args), b = shell("--threads 2 " + args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(shell("bogus").code, 1);
  EXPECT_EQ(shell("loss-check --rho 1 --samples 100").code, 2);
}

}  // namespace
}  // namespace bosonlab::cli
