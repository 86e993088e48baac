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


#include "upv/suite/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "upv/exactalg/scalar.hpp"

namespace upv::suite {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& v) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ConfigError(key + ": expected a non-negative integer, got '" + v + "'");
  }
  try {
    return std::stoull(v);
  } catch (const std::out_of_range&) {
    throw ConfigError(key + ": value out of range");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

const std::vector<std::string>& keys() {
  static const std::vector<std::string> k{"primes", "seed", "nu", "lambda", "max_degree", "threads", "output", "stable"};
  return k;
}

}  // namespace

void RunConfig::set(const std::string& key_in, const std::string& value_in) {
  std::string key = key_in, value = trim(value_in);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "primes") {
    primes.clear();
    for (const auto& p : split(value, ',')) primes.push_back(parse_unsigned(key, p));
    if (primes.empty()) throw ConfigError("primes: empty list");
  } else if (key == "seed") {
    seed = parse_unsigned(key, value);
  } else if (key == "nu") {
    auto parts = split(value, ',');
    if (parts.size() != 5) throw ConfigError("nu: expected five comma-separated integers");
    std::array<std::string, 5> n;
    for (std::size_t k = 0; k < 5; ++k) {
      try {
        (void)alg::Rational::parse(parts[k]);
      } catch (const std::exception&) {
        throw ConfigError("nu: cannot parse '" + parts[k] + "'");
      }
      n[k] = parts[k];
    }
    nu = n;
  } else if (key == "lambda") {
    lambda = value;
  } else if (key == "max_degree") {
    max_degree = static_cast<int>(parse_unsigned(key, value));
  } else if (key == "threads") {
    threads = static_cast<unsigned>(parse_unsigned(key, value));
    if (threads == 0) throw ConfigError("threads: must be at least 1");
  } else if (key == "output") {
    output = value;
  } else if (key == "stable") {
    stable = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + key_in + "'");
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(n) + ": expected key = value");
    set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void RunConfig::apply_env() {
  for (const auto& k : keys()) {
    std::string name = "UPV_" + k;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    if (const char* v = std::getenv(name.c_str())) set(k, v);
  }
}

void RunConfig::validate() const {
  for (auto p : primes) {
    if (!alg::is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
    if (p % 4 != 1) {
      throw ConfigError("prime " + std::to_string(p) +
                        " is not 1 mod 4: the checks need a square root of -1 (epsilon) in F_p");
    }
  }
  alg::Rational l;
  try {
    l = alg::Rational::parse(lambda);
  } catch (const std::exception&) {
    throw ConfigError("lambda: cannot parse '" + lambda + "' as a rational");
  }
  if (l.is_zero() || l == alg::Rational(1) || l == alg::Rational(-1)) {
    throw ConfigError("lambda must avoid 0, 1 and -1");
  }
  if (max_degree < 0 || max_degree > 8) throw ConfigError("max_degree must lie in 0..8");
}

Json RunConfig::to_json() const {
  Json j;
  j["primes"] = primes;
  j["seed"] = seed;
  if (nu) j["nu"] = *nu;
  j["lambda"] = lambda;
  j["max_degree"] = max_degree;
  j["threads"] = threads;
  if (!output.empty()) j["output"] = output;
  j["stable"] = stable;
  return j;
}

}  // namespace upv::suite
