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


// F_q-points of the cover surface Z1 = Z2 = 0 in (P^1)^4, their images in
// P(1^8, 2^8), and the finite-field certificates built on them.

#ifndef UPV_COVER_ENUMERATE_HPP_
#define UPV_COVER_ENUMERATE_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "upv/cover/projaut.hpp"
#include "upv/grouprep/grouprep.hpp"
#include "upv/report/report.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::cover {

using alg::PrimeField;
using alg::Zp;

// Bit i of chart set: factor i is the point (0:1). Otherwise t_i0 = 1 and
// t[i] holds t_i1.
struct SurfacePoint {
  std::uint8_t chart = 0;
  std::array<std::uint64_t, 4> t{};

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
  friend auto operator<=>(const SurfacePoint&, const SurfacePoint&) = default;
};

std::string chart_string(std::uint8_t chart);
P1x4Point<Zp> to_projective(const PrimeField& f, const SurfacePoint& p);
SurfacePoint from_projective(const P1x4Point<Zp>& p);

struct SurfacePointSet {
  std::uint64_t q = 0;
  std::array<std::uint64_t, 5> nu{};
  std::vector<SurfacePoint> points;  // sorted

  bool contains(const SurfacePoint& p) const;
  // Header "q nu0 nu1 nu2 nu3 nu4 count", then "chart t0 t1 t2 t3" per point.
  std::string dump() const;
  static SurfacePointSet parse(const std::string& text);
};

unproj::FamilyParams<Zp> params_from(const PrimeField& f, const std::array<std::uint64_t, 5>& nu);

// All F_q-points of Z1 = Z2 = 0, solving Z1 linearly in the last factor.
// Work is split over the first factor; the merged result is sorted.
SurfacePointSet enumerate_surface(const PrimeField& f, const unproj::FamilyParams<Zp>& p,
                                  unsigned threads = 1);

// The 16 coordinates of sigma(P).
std::vector<Zp> sigma_coordinates(const PrimeField& f, const P1x4Point<Zp>& p);
// Canonical sigma-images of the points of a set, deduplicated and sorted.
std::vector<grouprep::WeightedPoint> image_points(const PrimeField& f, const SurfacePointSet& s);
// Canonical sigma-images of all of (P^1(F_q))^4.
std::vector<grouprep::WeightedPoint> sigma_image(const PrimeField& f);

// Rank of the chart Jacobian of (Z1, Z2) at a point.
std::size_t jacobian_rank(const PrimeField& f, const unproj::FamilyParams<Zp>& p, const SurfacePoint& pt);

struct FreeSmoothData {
  std::size_t points = 0;
  std::vector<SurfacePoint> singular;
  // (group element index, point) pairs with g(P) = P, g != 1.
  std::vector<std::pair<std::size_t, SurfacePoint>> fixed;
};

FreeSmoothData inspect_free_and_smooth(const PrimeField& f, const unproj::FamilyParams<Zp>& p,
                                       const SurfacePointSet& s, const FiniteProjGroup<Zp>& g);

// nu with every entry nonzero.
unproj::FamilyParams<Zp> draw_params(const PrimeField& f, std::mt19937_64& rng);

// The surface S^{ij}_{ab}: its two y-indices.
std::array<alg::Index4, 2> s_surface_indices(int i, int j, int a, int b);
// Canonical F_q-points of S^{ij}_{ab}.
std::vector<grouprep::WeightedPoint> s_surface_points(const PrimeField& f, int i, int j, int a, int b);

CheckReport check_enumeration(std::uint64_t seed);
CheckReport check_free_action(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int draws = 5);
CheckReport check_orbit_closure(const std::vector<std::uint64_t>& primes, std::uint64_t seed);
CheckReport check_hplane_decomposition(std::uint64_t q);

}  // namespace upv::cover

#endif  // UPV_COVER_ENUMERATE_HPP_
