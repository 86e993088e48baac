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


// Run configuration: defaults, key=value files, UPV_* environment overrides.

#ifndef UPV_SUITE_CONFIG_HPP_
#define UPV_SUITE_CONFIG_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "upv/report/report.hpp"

namespace upv::suite {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::vector<std::uint64_t> primes{13, 17, 29};
  std::uint64_t seed = 0;
  std::optional<std::array<std::string, 5>> nu;
  std::string lambda = "-4";
  int max_degree = 4;
  unsigned threads = 1;
  std::string output;
  // Zero time_ms in emitted reports so streams compare byte for byte.
  bool stable = false;

  // Keys: primes, seed, nu, lambda, max_degree, threads, output, stable.
  // Lists are comma separated. Throws ConfigError.
  void set(const std::string& key, const std::string& value);
  // Lines "key = value"; '#' starts a comment.
  void load_file(const std::string& path);
  // UPV_PRIMES, UPV_SEED, ... for every key above.
  void apply_env();
  // Primes must be 1 mod 4; lambda must parse and avoid 0, 1, -1.
  void validate() const;

  Json to_json() const;
};

}  // namespace upv::suite

#endif  // UPV_SUITE_CONFIG_HPP_
