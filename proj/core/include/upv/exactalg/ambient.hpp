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

#ifndef UPV_EXACTALG_AMBIENT_HPP_
#define UPV_EXACTALG_AMBIENT_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace upv::alg {

inline constexpr int kMaxVars = 16;

// Exponent vector. Unused trailing slots stay zero. Negative entries are
// only produced by Laurent substitutions.
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  std::int16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  std::int16_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

  bool is_one() const;
  bool has_negative() const;
  int total_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial unit_monomial(int var, int power = 1);
bool divides(const Monomial& d, const Monomial& m);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// A named polynomial ring: ordered variables with a weight (for the weighted
// grading) and an optional N^4 multidegree.
class Ambient {
 public:
  Ambient(std::string name, std::vector<std::string> var_names, std::vector<int> weights,
          std::vector<std::array<int, 4>> multidegrees = {});

  // x00, x01, ..., x31 (weight 1) then y_abcd for abcd in L (weight 2).
  static const Ambient& xy();
  // t00, t01, ..., t31 with multidegree e_i.
  static const Ambient& t4();

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  int weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
  bool has_multidegree() const { return !multidegrees_.empty(); }
  const std::array<int, 4>& multidegree(int i) const {
    return multidegrees_.at(static_cast<std::size_t>(i));
  }
  // -1 if absent.
  int index_of(const std::string& var) const;

  int weighted_degree(const Monomial& m) const;
  std::array<int, 4> multidegree(const Monomial& m) const;
  std::string format(const Monomial& m) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<std::array<int, 4>> multidegrees_;
};

// ---------------------------------------------------------------------------
// Index conventions shared by every module.

using Index4 = std::array<int, 4>;

constexpr int comp(int a) { return 1 - a; }

// The eight 4-tuples over {0,1} with even sum, lexicographic.
const std::array<Index4, 8>& ell();
// Position of abcd in ell(); throws for odd tuples.
int ell_position(const Index4& abcd);
bool is_even(const Index4& abcd);
Index4 complement(const Index4& abcd);
std::string index_string(const Index4& abcd);

constexpr int x_var(int i, int a) { return 2 * i + a; }
int y_var(const Index4& abcd);
constexpr int t_var(int i, int a) { return 2 * i + a; }

}  // namespace upv::alg

#endif  // UPV_EXACTALG_AMBIENT_HPP_
