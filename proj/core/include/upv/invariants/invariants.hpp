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


// Hilbert functions of the coordinate rings of X, Y, V and T over prime
// fields, and the intersection ring of (P^1)^4.

#ifndef UPV_INVARIANTS_INVARIANTS_HPP_
#define UPV_INVARIANTS_INVARIANTS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "upv/exactalg/poly.hpp"
#include "upv/report/report.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::invariants {

using alg::Monomial;
using alg::Poly;
using alg::Rational;

// Monomials of weighted degree d in the given variables of an ambient.
std::vector<Monomial> weighted_monomials(const alg::Ambient& amb, const std::vector<int>& vars, int d);

// h(d) = #monomials(d) - rank{ g * m }, computed over F_p. Generators must be
// homogeneous and supported on `vars`.
std::size_t hilbert_value(const std::vector<Poly<alg::Zp>>& gens, const std::vector<int>& vars, int d,
                          std::uint64_t p);

struct HilbertProfile {
  std::string ideal;
  std::uint64_t prime = 0;
  std::vector<std::string> nu;
  std::vector<std::size_t> h;  // h[d]

  // Aligned table: "d  h(d)" rows.
  std::string table() const;
  Json to_json() const;
};

// X in the eight x variables.
HilbertProfile hilbert_x(std::uint64_t p, int max_degree);
HilbertProfile hilbert_y(std::uint64_t p, int max_degree);
HilbertProfile hilbert_v(std::uint64_t p, int max_degree);
// T with x01 eliminated through the hyperplane.
HilbertProfile hilbert_t(std::uint64_t p, const unproj::FamilyParams<alg::Zp>& nu, int max_degree);

// 8 + 12 n (n - 1), n >= 2.
std::int64_t plurigenus_expected(int n);
// Coefficients of (1 - t^2)^3 / (1 - t)^8 up to t^max_degree.
std::vector<std::int64_t> complete_intersection_series(int max_degree);

// Z[h1..h4]/(h_i^2): coefficient k is the monomial prod_{i in k} h_i.
class IntersectionClass {
 public:
  IntersectionClass() = default;
  static IntersectionClass unit();
  static IntersectionClass h(int i);  // i = 1..4
  static IntersectionClass hyperplane();  // h1 + h2 + h3 + h4
  static IntersectionClass multidegree(const std::array<int, 4>& d);  // sum d_i h_i

  std::int64_t coefficient(unsigned mask) const { return c_[mask]; }
  friend IntersectionClass operator+(const IntersectionClass& a, const IntersectionClass& b);
  friend IntersectionClass operator*(const IntersectionClass& a, const IntersectionClass& b);
  friend IntersectionClass operator*(std::int64_t k, const IntersectionClass& a);
  friend bool operator==(const IntersectionClass&, const IntersectionClass&) = default;

 private:
  std::array<std::int64_t, 16> c_{};
};

// Coefficient of h1 h2 h3 h4 in the product; throws unless the product is
// concentrated in top degree.
std::int64_t intersection_number(const std::vector<IntersectionClass>& classes);

CheckReport check_hilbert_t(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int max_degree = 4);
CheckReport check_hilbert_x(const std::vector<std::uint64_t>& primes, int max_degree = 6);
CheckReport check_hilbert_v(const std::vector<std::uint64_t>& primes, int max_degree = 4);
CheckReport check_hilbert_y(const std::vector<std::uint64_t>& primes, int max_degree = 4);
CheckReport check_intersection();

}  // namespace upv::invariants

#endif  // UPV_INVARIANTS_INVARIANTS_HPP_
