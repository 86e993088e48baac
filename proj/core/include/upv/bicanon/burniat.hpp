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


// The Burniat pencil -nu0 = nu1 = nu2 = nu3: affine charts of V, the 24
// nodes, the plane model with parameter lambda, and the lambda -> nu map.

#ifndef UPV_BICANON_BURNIAT_HPP_
#define UPV_BICANON_BURNIAT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "upv/exactalg/poly.hpp"
#include "upv/report/report.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::bicanon {

using alg::GaussRational;
using alg::MonomialMap;
using alg::Rational;

// x1, x2, x3 on C^3 minus the coordinate planes.
const alg::Ambient& xi_ambient();
// x00, x21, x31, y0000 on the open set x21 x31 != 0 of V.
const alg::Ambient& zeta_ambient();
// x00, x21, x31 after setting y0000 = 1.
const alg::Ambient& zeta_affine_ambient();
// lambda (weight 0), u0, u1, u2.
const alg::Ambient& plane_ambient();

// (1, -1, x1, -1/x1, x2, -1/x2, x3, -1/x3, y_abcd = x_{1b'} x_{2c'} x_{3d'} / x_{0a}).
const MonomialMap<Rational>& xi2_map();
// The inverse of (x00, x21, x31, y0000) on the open set x21 x31 != 0.
const MonomialMap<Rational>& zeta2_map();

// 1 - (1/2) sum (x_i^2 + x_i^-2).
alg::Poly<Rational> f1();
// prod (x_i - 1/x_i).
alg::Poly<Rational> f2();
// zeta2^#(s0 - s1 - s2 - s3) at y0000 = 1, cleared of denominators and
// scaled so that x00^2 has coefficient -1.
alg::Poly<Rational> f3_derived();
// The reference form of the same polynomial.
alg::Poly<Rational> f3_reference();

// The 24 points of C^3 with x^4 = 1 coordinatewise lying on F1 = 0.
std::vector<std::array<GaussRational, 3>> node_set();

// s0..s3 as cubics in u with coefficients in Q[lambda].
std::array<alg::Poly<Rational>, 4> plane_cubics();
// (lambda+1)^2 prod (s_i - s0) + 2 lambda s0 (s1 + s2 + s3 - s0)^2.
alg::Poly<Rational> lambda_identity_residual();

struct ParameterMap {
  Rational lambda;
  Rational nu4_squared;          // forced by S3 containing the plane image
  Rational reference_nu4_squared;  // (4(lambda+1))^2
  std::optional<Rational> nu;    // sqrt(-lambda) when rational
  std::optional<Rational> nu4;   // sqrt(nu4_squared) when rational
  std::optional<unproj::FamilyParams<Rational>> params;
};

// Throws std::invalid_argument for lambda in {0, 1, -1}.
ParameterMap parameter_map(const Rational& lambda);

CheckReport check_burniat_nodes();
CheckReport check_charts();
CheckReport check_f3();
// `id` lets the same check run under an alias.
CheckReport check_lambda_identity(const std::string& id = "burniat.lambda_identity");
CheckReport check_parameter_map(const Rational& lambda);
// The singular points of a pencil member over F_q, against the 24 nodes.
CheckReport check_singular_points(std::uint64_t q, std::uint64_t seed);

}  // namespace upv::bicanon

#endif  // UPV_BICANON_BURNIAT_HPP_
