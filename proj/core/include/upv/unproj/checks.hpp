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


// Structural checks on the ideals of X, Y, V and T.

#ifndef UPV_UNPROJ_CHECKS_HPP_
#define UPV_UNPROJ_CHECKS_HPP_

#include <array>
#include <vector>

#include "upv/exactalg/linalg.hpp"
#include "upv/report/report.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::unproj {

// H_abcd = (x_0a = x_1b = x_2c = x_3d = 0) as rows over the eight x's.
alg::Matrix<Rational> plane_equations(const Index4& abcd);

// The 12 x 12 Jacobian block around y_abcd: rows are the hyperplane, the
// seven quartics and four cubics through y_abcd; columns are x_{0a'}, the
// other seven y's, then x_0a, x_1b, x_2c, x_3d.
alg::Matrix<Poly<Rational>> jacobian_block(const Index4& abcd);

// The 4 x 4 symmetric matrix of the chart x10 = 1, homogenized entries.
std::array<std::array<Poly<Rational>, 4>, 4> veronese_matrix();
// Every 2 x 2 minor (rows r1 < r2, columns c1 < c2), homogenized with x10.
std::vector<Poly<Rational>> veronese_minors();

// x00 * l + sign * nu4 * prod_{i>0} (x_i0 + x_i1), l = sum nu_i s_i after
// rewriting.
Poly<Rational> elimination_cubic(const FamilyParams<Rational>& p, int sign);

CheckReport check_x_ideal();
CheckReport check_census();
CheckReport check_master_pullback();
CheckReport check_phi_consistency();
CheckReport check_quartic_witness();
CheckReport check_plane_incidences();
CheckReport check_jacobian_minor();
CheckReport check_veronese_chart();
CheckReport check_elimination_cubic();
CheckReport check_t_ideal();

}  // namespace upv::unproj

#endif  // UPV_UNPROJ_CHECKS_HPP_
