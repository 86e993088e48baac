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


// The double cover sigma: (P^1)^4 -> Y, its deck involution s, and the two
// multidegree-(1,1,1,1) / (2,2,2,2) surfaces Z1, Z2 cutting out the cover of T.

#ifndef UPV_COVER_SIGMA_HPP_
#define UPV_COVER_SIGMA_HPP_

#include "upv/exactalg/poly.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::cover {

using alg::MonomialMap;
using alg::Poly;
using alg::Rational;

// Pullback sigma^#: XY -> T4.
const MonomialMap<Rational>& sigma_map();
// s^#: t_ia -> (-1)^a t_ia.
const MonomialMap<Rational>& deck_map();

// t01 t10 t20 t30 + t00 t11 t21 t31.
Poly<Rational> z1();

// sum_i nu_i (t_i0^2 prod_{j!=i} t_j1^2 + t_i1^2 prod_{j!=i} t_j0^2)
//   - 2 nu4 sum_L (-1)^{(b+c+d-a)/2} t0a^2 t1b^2 t2c^2 t3d^2.
template <alg::Field F>
Poly<typename F::Elem> build_z2(const F& field,
                                const unproj::FamilyParams<typename F::Elem>& p) {
  using E = typename F::Elem;
  const auto& t4 = alg::Ambient::t4();
  Poly<E> z(t4);
  for (int i = 0; i < 4; ++i) {
    alg::Monomial m0, m1;
    for (int j = 0; j < 4; ++j) {
      m0[alg::t_var(j, j == i ? 0 : 1)] = 2;
      m1[alg::t_var(j, j == i ? 1 : 0)] = 2;
    }
    z.add_term(m0, p.nu[static_cast<std::size_t>(i)]);
    z.add_term(m1, p.nu[static_cast<std::size_t>(i)]);
  }
  for (const auto& t : alg::ell()) {
    alg::Monomial m;
    for (int j = 0; j < 4; ++j) m[alg::t_var(j, t[static_cast<std::size_t>(j)])] = 2;
    int e = (t[1] + t[2] + t[3] - t[0]) / 2;
    E c = field.from_int(e % 2 ? 2 : -2) * p.nu[4];
    z.add_term(m, c);
  }
  return z;
}

}  // namespace upv::cover

#endif  // UPV_COVER_SIGMA_HPP_
