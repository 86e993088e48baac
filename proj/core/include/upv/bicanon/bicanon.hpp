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


// The bicanonical image of T/G: the cubic surface S3 in P^3 with coordinates
// s0..s3, its nodes, line/conic plane sections and the branch data of the
// (Z/2)^2 cover T/G -> S3.

#ifndef UPV_BICANON_BICANON_HPP_
#define UPV_BICANON_BICANON_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upv/exactalg/linalg.hpp"
#include "upv/exactalg/poly.hpp"
#include "upv/grouprep/grouprep.hpp"
#include "upv/report/report.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::bicanon {

using alg::Poly;
using alg::PrimeField;
using alg::Zp;

// s0, s1, s2, s3.
const alg::Ambient& s_ambient();

// l = nu0 s0 + nu1 s1 + nu2 s2 + nu3 s3.
template <alg::Field F>
Poly<typename F::Elem> l_form(const F& f, const unproj::FamilyParams<typename F::Elem>& p) {
  Poly<typename F::Elem> l(s_ambient());
  for (int i = 0; i < 4; ++i) {
    l += Poly<typename F::Elem>::variable(s_ambient(), i, f.one()) * p.nu[static_cast<std::size_t>(i)];
  }
  return l;
}

// 8 nu4^2 (s1 - s0)(s2 - s0)(s3 - s0) - s0 l^2.
template <alg::Field F>
Poly<typename F::Elem> s_cubic(const F& f, const unproj::FamilyParams<typename F::Elem>& p) {
  using P = Poly<typename F::Elem>;
  const auto& s = s_ambient();
  P s0 = P::variable(s, 0, f.one());
  P prod = P::constant(s, f.from_int(8) * p.nu[4] * p.nu[4]);
  for (int i = 1; i < 4; ++i) prod = prod * (P::variable(s, i, f.one()) - s0);
  P l = l_form(f, p);
  return prod - s0 * l * l;
}

// 16 nu4^2 (s_{i+1} - s0)(s_{i+2} - s0) + l^2, indices in {1, 2, 3} mod 3.
template <alg::Field F>
Poly<typename F::Elem> conic_form(const F& f, const unproj::FamilyParams<typename F::Elem>& p, int i) {
  using P = Poly<typename F::Elem>;
  const auto& s = s_ambient();
  P s0 = P::variable(s, 0, f.one());
  int j = i % 3 + 1, k = (i + 1) % 3 + 1;
  P l = l_form(f, p);
  return P::constant(s, f.from_int(16) * p.nu[4] * p.nu[4]) * (P::variable(s, j, f.one()) - s0) *
             (P::variable(s, k, f.one()) - s0) +
         l * l;
}

using SPoint = std::array<Zp, 4>;

// (x00^2 : (x10^2 + x11^2)/2 : (x20^2 + x21^2)/2 : (x30^2 + x31^2)/2); nullopt
// if every coordinate vanishes.
std::optional<SPoint> s_coordinates(const PrimeField& f, const grouprep::WeightedPoint& p);

// The node n_i: s_j = s0 for j != i and l = 0. nullopt if nu_i = 0.
std::optional<SPoint> node(const PrimeField& f, const unproj::FamilyParams<Zp>& p, int i);

bool on_line(const SPoint& s, int i);                                              // L_i
bool on_conic(const PrimeField& f, const unproj::FamilyParams<Zp>& p, const SPoint& s, int i);  // C_i
bool same_point(const SPoint& a, const SPoint& b);
// D_i = C_{i+1} + L_{i-1} together with n_i.
bool in_branch_locus(const PrimeField& f, const unproj::FamilyParams<Zp>& p, const SPoint& s, int i);

std::string to_string(const SPoint& s);

// The squaring identity: after x01 -> -x00 and x_i0 x_i1 -> -x00^2,
// x00^2 l^2 - nu4^2 prod (x_i0 + x_i1)^2 + S3(s(x)) vanishes.
Poly<Zp> squaring_residual(const PrimeField& f, const unproj::FamilyParams<Zp>& p);

// The S3 check also verifies T-point images, at one nu per prime.
CheckReport check_s3_cubic(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int draws = 20);
CheckReport check_point_images(const std::vector<std::uint64_t>& primes, std::uint64_t seed);
CheckReport check_nodes(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int draws = 100);
CheckReport check_plane_sections(const std::vector<std::uint64_t>& primes, std::uint64_t seed);
CheckReport check_branch_loci(std::uint64_t q, std::uint64_t seed, int draws = 3);
// Fixed points of G and of the involutions named in the branch-locus
// analysis, on the sigma-image of one enumerated surface.
CheckReport check_stabilizers(std::uint64_t q, std::uint64_t seed);

}  // namespace upv::bicanon

#endif  // UPV_BICANON_BICANON_HPP_
