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


// upv: run verification checks, dump artifacts, list check ids.
//
//   upv run all
//   upv run cover.free_action --prime 13 --prime 17
//   upv dump points --prime 13 --seed 42
//   upv list
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or config error.

#include <fstream>
#include <iostream>
#include <memory>
#include <random>

#include "CLI11.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/invariants/invariants.hpp"
#include "upv/suite/config.hpp"
#include "upv/suite/registry.hpp"
#include "upv/unproj/ideals.hpp"

namespace {

using upv::suite::ConfigError;
using upv::suite::RunConfig;

constexpr int kUsage = 2;

upv::unproj::FamilyParams<upv::alg::Zp> resolve_nu(const RunConfig& cfg, const upv::alg::PrimeField& f) {
  if (cfg.nu) {
    upv::unproj::FamilyParams<upv::alg::Zp> p;
    for (std::size_t k = 0; k < 5; ++k) p.nu[k] = f.from_rational(upv::alg::Rational::parse((*cfg.nu)[k]));
    if (p.all_zero()) throw ConfigError("nu must not be all zero");
    return p;
  }
  std::mt19937_64 rng(cfg.seed);
  return upv::cover::draw_params(f, rng);
}

// Writes to cfg.output when set, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigError("cannot write " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int do_run(const std::vector<std::string>& targets, const RunConfig& cfg) {
  std::vector<const upv::suite::CheckSpec*> specs;
  for (const auto& t : targets) {
    for (const auto* s : upv::suite::select(t)) specs.push_back(s);
  }
  Sink sink(cfg.output);
  bool ok = true;
  for (const auto* s : specs) {
    auto r = upv::suite::run_check(*s, cfg);
    ok = ok && r.passed();
    sink.out() << r.to_line() << '\n' << std::flush;
  }
  return ok ? 0 : 1;
}

int do_dump(const std::string& what, const RunConfig& cfg) {
  upv::alg::PrimeField f(cfg.primes.front());
  auto nu = resolve_nu(cfg, f);
  Sink sink(cfg.output);
  if (what == "ideal") {
    sink.out() << upv::unproj::build_t_ideal(f, nu).dump();
  } else if (what == "points") {
    sink.out() << upv::cover::enumerate_surface(f, nu, cfg.threads).dump();
  } else if (what == "hilbert") {
    sink.out() << upv::invariants::hilbert_t(f.p(), nu, cfg.max_degree).table();
  } else {
    throw ConfigError("unknown artifact '" + what + "' (expected ideal, points or hilbert)");
  }
  return 0;
}

int do_list() {
  for (const auto& c : upv::suite::registry()) {
    std::cout << c.id << '\t' << c.description << (c.alias ? " (alias)" : "") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the unprojection construction"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> seed;
  std::string nu, lambda, output;
  std::optional<int> max_degree;
  std::optional<unsigned> threads;
  bool stable = false;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--prime", primes, "prime p = 1 mod 4; repeat for several")->delimiter(',');
  app.add_option("--seed", seed, "random seed");
  app.add_option("--nu", nu, "nu0,nu1,nu2,nu3,nu4");
  app.add_option("--lambda", lambda, "Burniat parameter, a rational");
  app.add_option("--max-degree", max_degree, "largest degree of Hilbert functions of T");
  app.add_option("--threads", threads, "worker threads for enumeration");
  app.add_option("--output", output, "write to this file instead of stdout");
  app.add_flag("--stable", stable, "zero the timings for byte-identical output");

  std::vector<std::string> targets;
  auto* run = app.add_subcommand("run", "run checks: an id, a suite name or all");
  run->add_option("target", targets, "check ids or suite names")->required();
  std::string artifact;
  auto* dump = app.add_subcommand("dump", "write an artifact: ideal, points or hilbert");
  dump->add_option("artifact", artifact)->required();
  auto* list = app.add_subcommand("list", "list check ids");
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    cfg.apply_env();
    if (!primes.empty()) {
      cfg.primes = primes;
    }
    if (seed) cfg.seed = *seed;
    if (!nu.empty()) cfg.set("nu", nu);
    if (!lambda.empty()) cfg.lambda = lambda;
    if (max_degree) cfg.max_degree = *max_degree;
    if (threads) cfg.set("threads", std::to_string(*threads));
    if (!output.empty()) cfg.output = output;
    if (stable) cfg.stable = true;
    cfg.validate();

    if (*run) return do_run(targets, cfg);
    if (*dump) return do_dump(artifact, cfg);
    if (*list) return do_list();
  } catch (const ConfigError& e) {
    std::cerr << "upv: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "upv: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
