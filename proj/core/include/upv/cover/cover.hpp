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


// Lifts of the (Z/2)^6 generators to (P^1)^4, the group they generate over a
// field containing i, and the checks on the double cover.

#ifndef UPV_COVER_COVER_HPP_
#define UPV_COVER_COVER_HPP_

#include <array>
#include <vector>

#include "upv/cover/projaut.hpp"
#include "upv/cover/sigma.hpp"
#include "upv/grouprep/grouprep.hpp"
#include "upv/report/report.hpp"

namespace upv::cover {

// Images of (t00, t01, ..., t31) as (coefficient code, target variable);
// code 0 -> 1, 1 -> i, 2 -> -i.
struct SubstitutionRow {
  std::array<int, 8> target;
  std::array<int, 8> code;
};

// Table rows for the three generators of the lifted group, in the order
// a1*b2, a2*b3, a3*b1.
const std::array<SubstitutionRow, 3>& lifted_generator_rows();
// alpha~_i (permutations) and beta~_i (diagonal), i = 1, 2, 3.
const SubstitutionRow& alpha_lift_row(int i);
const std::array<int, 8>& beta_lift_codes(int i);

template <alg::Field F>
typename F::Elem unit_from_code(const F& f, int code) {
  switch (code) {
    case 0: return f.one();
    case 1: return f.i();
    case 2: return -f.i();
    case 3: return -f.one();
  }
  throw std::invalid_argument("bad coefficient code");
}

template <alg::Field F>
ProjAut<typename F::Elem> from_row(const F& f, const SubstitutionRow& row) {
  std::array<typename F::Elem, 8> c;
  for (std::size_t v = 0; v < 8; ++v) c[v] = unit_from_code(f, row.code[v]);
  return ProjAut<typename F::Elem>::from_substitution(row.target, c);
}

template <alg::Field F>
std::vector<ProjAut<typename F::Elem>> lifted_generators(const F& f) {
  std::vector<ProjAut<typename F::Elem>> out;
  for (const auto& row : lifted_generator_rows()) out.push_back(from_row(f, row));
  return out;
}

template <alg::Field F>
ProjAut<typename F::Elem> alpha_lift(const F& f, int i) {
  return from_row(f, alpha_lift_row(i));
}

template <alg::Field F>
ProjAut<typename F::Elem> beta_lift(const F& f, int i) {
  std::array<typename F::Elem, 8> d;
  for (std::size_t v = 0; v < 8; ++v) d[v] = unit_from_code(f, beta_lift_codes(i)[v]);
  return ProjAut<typename F::Elem>::diagonal(d);
}

template <alg::Field F>
ProjAut<typename F::Elem> deck(const F& f) {
  std::array<typename F::Elem, 8> d;
  for (std::size_t v = 0; v < 8; ++v) d[v] = v % 2 ? -f.one() : f.one();
  return ProjAut<typename F::Elem>::diagonal(d);
}

template <alg::Field F>
FiniteProjGroup<typename F::Elem> lifted_group(const F& f) {
  return FiniteProjGroup<typename F::Elem>(lifted_generators(f), f.one());
}

// g~^#(sigma^#(v)) = lambda^{w(v)} sigma^#(g^#(v)) for every XY variable v;
// returns lambda, or nullopt if no single scalar works.
template <alg::Field F>
std::optional<typename F::Elem> lift_scalar(const F& f, const ProjAut<typename F::Elem>& lift,
                                            grouprep::Word g) {
  using E = typename F::Elem;
  auto sigma = alg::convert(sigma_map(), f);
  auto gmap = alg::convert(grouprep::action(g).map, f);
  const auto& xy = alg::Ambient::xy();
  std::optional<E> lambda;
  for (int v = 0; v < xy.size(); ++v) {
    Poly<E> pv = Poly<E>::variable(xy, v, f.one());
    Poly<E> lhs = lift.pullback(sigma(pv), f.one());
    Poly<E> rhs = sigma(gmap(pv));
    auto c = alg::proportionality(lhs, rhs);
    if (!c) return std::nullopt;
    if (xy.weight(v) == 1) {
      if (lambda && !(*lambda == *c)) return std::nullopt;
      lambda = *c;
    }
  }
  if (!lambda) return std::nullopt;
  for (int v = 8; v < xy.size(); ++v) {
    Poly<E> pv = Poly<E>::variable(xy, v, f.one());
    auto c = alg::proportionality(lift.pullback(sigma(pv), f.one()), sigma(gmap(pv)));
    if (!c || !(*c == *lambda * *lambda)) return std::nullopt;
  }
  return lambda;
}

CheckReport check_sigma();
CheckReport check_branch_structure();
CheckReport check_lifts();
CheckReport check_group_certification();
CheckReport check_z2();

}  // namespace upv::cover

#endif  // UPV_COVER_COVER_HPP_
