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

#include "upv/exactalg/ambient.hpp"

#include <algorithm>
#include <stdexcept>

namespace upv::alg {

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

bool Monomial::has_negative() const {
  return std::any_of(e.begin(), e.end(), [](auto v) { return v < 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    r.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
  }
  return r;
}

Monomial unit_monomial(int var, int power) {
  if (var < 0 || var >= kMaxVars) throw std::out_of_range("variable index");
  Monomial m;
  m[var] = static_cast<std::int16_t>(power);
  return m;
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.e.size(); ++i) {
    if (d.e[i] > m.e[i]) return false;
  }
  return true;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : m.e) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Ambient::Ambient(std::string name, std::vector<std::string> var_names, std::vector<int> weights,
                 std::vector<std::array<int, 4>> multidegrees)
    : name_(std::move(name)),
      names_(std::move(var_names)),
      weights_(std::move(weights)),
      multidegrees_(std::move(multidegrees)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars)) {
    throw std::invalid_argument("too many variables for ambient " + name_);
  }
  if (weights_.size() != names_.size()) throw std::invalid_argument("weight count mismatch");
  if (!multidegrees_.empty() && multidegrees_.size() != names_.size()) {
    throw std::invalid_argument("multidegree count mismatch");
  }
}

const Ambient& Ambient::xy() {
  static const Ambient amb = [] {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 0; i < 4; ++i) {
      for (int a = 0; a < 2; ++a) {
        names.push_back("x" + std::to_string(i) + std::to_string(a));
        weights.push_back(1);
      }
    }
    for (const auto& idx : ell()) {
      names.push_back("y" + index_string(idx));
      weights.push_back(2);
    }
    return Ambient("XY", names, weights);
  }();
  return amb;
}

const Ambient& Ambient::t4() {
  static const Ambient amb = [] {
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<std::array<int, 4>> md;
    for (int i = 0; i < 4; ++i) {
      for (int a = 0; a < 2; ++a) {
        names.push_back("t" + std::to_string(i) + std::to_string(a));
        weights.push_back(1);
        std::array<int, 4> d{};
        d[static_cast<std::size_t>(i)] = 1;
        md.push_back(d);
      }
    }
    return Ambient("T4", names, weights, md);
  }();
  return amb;
}

int Ambient::index_of(const std::string& var) const {
  auto it = std::find(names_.begin(), names_.end(), var);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int Ambient::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < size(); ++i) d += m[i] * weight(i);
  return d;
}

std::array<int, 4> Ambient::multidegree(const Monomial& m) const {
  std::array<int, 4> d{};
  if (!has_multidegree()) return d;
  for (int i = 0; i < size(); ++i) {
    for (std::size_t k = 0; k < 4; ++k) d[k] += m[i] * multidegree(i)[k];
  }
  return d;
}

std::string Ambient::format(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

const std::array<Index4, 8>& ell() {
  static const std::array<Index4, 8> tuples = [] {
    std::array<Index4, 8> out{};
    std::size_t k = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d)
            if ((a + b + c + d) % 2 == 0) out[k++] = {a, b, c, d};
    return out;
  }();
  return tuples;
}

bool is_even(const Index4& abcd) { return (abcd[0] + abcd[1] + abcd[2] + abcd[3]) % 2 == 0; }

int ell_position(const Index4& abcd) {
  const auto& tuples = ell();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    if (tuples[k] == abcd) return static_cast<int>(k);
  }
  throw std::invalid_argument("index " + index_string(abcd) + " has odd sum");
}

Index4 complement(const Index4& abcd) {
  return {comp(abcd[0]), comp(abcd[1]), comp(abcd[2]), comp(abcd[3])};
}

std::string index_string(const Index4& abcd) {
  std::string s;
  for (int v : abcd) s += std::to_string(v);
  return s;
}

int y_var(const Index4& abcd) { return 8 + ell_position(abcd); }

}  // namespace upv::alg
