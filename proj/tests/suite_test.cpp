// Copyright 2026 The upv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "upv/report/report.hpp"
#include "upv/suite/config.hpp"
#include "upv/suite/registry.hpp"

namespace upv::suite {
namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name, const std::string& body) {
  auto path = fs::temp_directory_path() / ("upv_test_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << body;
  return path;
}

TEST(Config, DefaultsValidate) {
  RunConfig c;
  EXPECT_EQ(c.primes, (std::vector<std::uint64_t>{13, 17, 29}));
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, RejectsBadValues) {
  auto invalid = [](const std::string& key, const std::string& value) {
    RunConfig c;
    try {
      c.set(key, value);
      c.validate();
    } catch (const ConfigError&) {
      return true;
    }
    return false;
  };
  EXPECT_TRUE(invalid("primes", "7"));
  EXPECT_TRUE(invalid("primes", "15"));
  EXPECT_TRUE(invalid("primes", "13,19"));
  EXPECT_TRUE(invalid("lambda", "0"));
  EXPECT_TRUE(invalid("lambda", "1"));
  EXPECT_TRUE(invalid("lambda", "-1"));
  EXPECT_TRUE(invalid("lambda", "x/2"));
  EXPECT_TRUE(invalid("max-degree", "9"));
  EXPECT_TRUE(invalid("threads", "0"));
  EXPECT_TRUE(invalid("nu", "1,2,3"));
  EXPECT_TRUE(invalid("colour", "red"));
  EXPECT_FALSE(invalid("primes", "41,5"));
  EXPECT_FALSE(invalid("lambda", "-9/4"));
}

TEST(Config, FileThenEnvironment) {
  auto path = temp_file("cfg", "# comment\nseed = 7\nmax_degree = 3\nprimes = 17\n");
  RunConfig c;
  c.load_file(path.string());
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.max_degree, 3);
  EXPECT_EQ(c.primes, (std::vector<std::uint64_t>{17}));
  ::setenv("UPV_SEED", "11", 1);
  c.apply_env();
  ::unsetenv("UPV_SEED");
  EXPECT_EQ(c.seed, 11u);
  EXPECT_EQ(c.max_degree, 3);
  fs::remove(path);
  auto bad = temp_file("bad", "seed 7\n");
  EXPECT_THROW(RunConfig().load_file(bad.string()), ConfigError);
  fs::remove(bad);
  EXPECT_THROW(RunConfig().load_file("/nonexistent/upv.cfg"), ConfigError);
}

TEST(Report, LineRoundTrip) {
  CheckReport r;
  r.id = "x.y";
  r.fail("first");
  r.witness["n"] = 3;
  r.params["prime"] = 13;
  r.time_ms = 42;
  auto back = CheckReport::from_line(r.to_line());
  EXPECT_EQ(back.id, r.id);
  EXPECT_EQ(back.status, Status::kFail);
  EXPECT_EQ(back.witness, r.witness);
  EXPECT_EQ(back.params, r.params);
  EXPECT_EQ(back.time_ms, 42);
  EXPECT_EQ(back.to_line(), r.to_line());
  for (auto s : {Status::kPass, Status::kFail, Status::kSkipped, Status::kUnstable}) {
    EXPECT_EQ(status_from_string(to_string(s)), s);
  }
}

TEST(Registry, SelectionRules) {
  std::set<std::string> ids;
  for (const auto& c : registry()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  std::size_t plain = 0;
  for (const auto& c : registry()) plain += !c.alias;
  EXPECT_EQ(select("all").size(), plain);
  std::size_t by_suite = 0;
  for (const auto& s : suites()) by_suite += select(s).size();
  EXPECT_EQ(by_suite, plain);
  ASSERT_EQ(select("unproj.census").size(), 1u);
  EXPECT_EQ(select("bicanon.lambda_identity").size(), 1u);
  EXPECT_ANY_THROW(select("nope"));
}

TEST(Registry, StableRunsAreByteIdentical) {
  RunConfig c;
  c.stable = true;
  const auto* spec = select("unproj.census").front();
  auto a = run_check(*spec, c).to_line(), b = run_check(*spec, c).to_line();
  EXPECT_EQ(a, b);
  EXPECT_EQ(CheckReport::from_line(a).time_ms, 0);
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  auto capture = fs::temp_directory_path() / ("upv_cli_" + std::to_string(::getpid()));
  std::string cmd = std::string(UPV_BIN) + " " + args + " > " + capture.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  fs::remove(capture);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli("list", &out), 0);
  EXPECT_NE(out.find("unproj.census"), std::string::npos);
  EXPECT_EQ(run_cli("--stable run unproj.census", &out), 0);
  auto r = CheckReport::from_line(out.substr(0, out.find('\n')));
  EXPECT_EQ(r.id, "unproj.census");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(run_cli("run nope"), 2);
  EXPECT_EQ(run_cli("--prime 7 list"), 2);
  EXPECT_EQ(run_cli("--lambda 0 run burniat.parameter_map"), 2);
  EXPECT_EQ(run_cli("--bogus list"), 2);
}

TEST(Cli, PrecedenceAndOutputFile) {
  auto cfg = temp_file("cli_cfg", "primes = 17\nstable = true\n");
  auto dest = fs::temp_directory_path() / ("upv_out_" + std::to_string(::getpid()));
  EXPECT_EQ(run_cli("--config " + cfg.string() + " --output " + dest.string() + " run cover.enumeration"), 0);
  std::ifstream in(dest);
  std::string line;
  std::getline(in, line);
  auto r = CheckReport::from_line(line);
  EXPECT_EQ(r.time_ms, 0);
  EXPECT_TRUE(r.passed());
  std::string out;
  EXPECT_EQ(run_cli("--config " + cfg.string() + " --prime 13 dump hilbert", &out), 0);
  EXPECT_FALSE(out.empty());
  fs::remove(cfg);
  fs::remove(dest);
}

}  // namespace
}  // namespace upv::suite
