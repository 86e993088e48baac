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


// The directed substitutions used on V to eliminate x01 and the weight-2
// variables: x01 -> -x00, x_i0 x_i1 -> -x00^2 (i > 0), and
// y_abcd x00 -> (-1)^a x_{1b'} x_{2c'} x_{3d'}.

#ifndef UPV_UNPROJ_REWRITING_HPP_
#define UPV_UNPROJ_REWRITING_HPP_

#include <utility>
#include <vector>

#include "upv/exactalg/ambient.hpp"
#include "upv/exactalg/poly.hpp"

namespace upv::unproj {

// Rewrites one monomial step; returns false if the monomial is irreducible.
bool rewrite_step(alg::Monomial& m, bool& negate);

// Normal form under the rules above. Each rule lowers (y-degree,
// x01-degree, mixed-pair count) lexicographically, so this terminates.
template <alg::Scalar K>
alg::Poly<K> reduce_by_rewriting(const alg::Poly<K>& f) {
  if (&f.ambient() != &alg::Ambient::xy()) throw alg::AmbientMismatch("rewriting needs the XY ambient");
  alg::Poly<K> out(f.ambient());
  std::vector<std::pair<alg::Monomial, K>> work(f.terms().begin(), f.terms().end());
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    bool negate = false;
    while (rewrite_step(m, negate)) {
    }
    out.add_term(m, negate ? -c : c);
  }
  return out;
}

}  // namespace upv::unproj

#endif  // UPV_UNPROJ_REWRITING_HPP_
