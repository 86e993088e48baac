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


// Presentations of the ideals of X, Y, V and T in P(1^8, 2^8).

#ifndef UPV_UNPROJ_IDEALS_HPP_
#define UPV_UNPROJ_IDEALS_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upv/exactalg/ambient.hpp"
#include "upv/exactalg/poly.hpp"
#include "upv/exactalg/scalar.hpp"

namespace upv::unproj {

using alg::Index4;
using alg::Poly;
using alg::Rational;

enum class Provenance { kQuadric, kCubic, kQuartic, kHyperplane, kQuadricSection };

std::string to_string(Provenance p);

// nu = (nu0, ..., nu4), projective.
template <alg::Scalar K>
struct FamilyParams {
  std::array<K, 5> nu;

  bool all_zero() const {
    for (const auto& v : nu) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& v : nu) out.push_back(v.to_string());
    return out;
  }
};

template <alg::Scalar K>
struct Generator {
  std::string name;
  Poly<K> poly;
  Provenance provenance;
};

template <alg::Scalar K>
struct IdealPresentation {
  std::string name;
  const alg::Ambient* ambient = &alg::Ambient::xy();
  std::vector<Generator<K>> generators;
  std::optional<FamilyParams<K>> params;

  std::size_t size() const { return generators.size(); }
  std::size_t count(Provenance p) const {
    std::size_t n = 0;
    for (const auto& g : generators) n += g.provenance == p;
    return n;
  }
  std::vector<Poly<K>> polys() const {
    std::vector<Poly<K>> out;
    for (const auto& g : generators) out.push_back(g.poly);
    return out;
  }
  // One generator per line: name<TAB>provenance<TAB>polynomial.
  std::string dump() const {
    std::string out;
    for (const auto& g : generators) {
      out += g.name + "\t" + to_string(g.provenance) + "\t" + g.poly.to_string() + "\n";
    }
    return out;
  }
};

// x_{k0}x_{k1} - x_{k+1,0}x_{k+1,1}, k = 0, 1, 2.
Poly<Rational> x_quadric(int k);
// y_abcd * x_{i,abcd_i} minus the product of the complemented x's of the
// other three factors.
Poly<Rational> cubic(const Index4& abcd, int i);
// Two smallest indices where a and b differ.
std::pair<int, int> quartic_witness(const Index4& a, const Index4& b);
// y_a y_b - (phi_a numerator over x_{i a_i}) (phi_b numerator over x_{j b_j});
// throws std::logic_error if the quotient is not a polynomial.
Poly<Rational> quartic_with_witness(const Index4& a, const Index4& b, int i, int j);
Poly<Rational> quartic(const Index4& a, const Index4& b);
Poly<Rational> hyperplane();                 // x00 + x01
Poly<Rational> s_form(int i);                // (x_i0^2 + x_i1^2) / 2
Poly<Rational> y_character_sum(const std::array<int, 3>& k);  // sum (-1)^{k.(b,c,d)} y_abcd
Poly<Rational> invariant_y();                // sum (-1)^a y_abcd

// Normal form modulo the three quadrics of X, and ideal membership.
Poly<Rational> reduce_mod_x_quadrics(const Poly<Rational>& f);
bool in_x_quadric_ideal(const Poly<Rational>& f);

IdealPresentation<Rational> build_x_ideal();
IdealPresentation<Rational> build_unprojection_ideal();
IdealPresentation<Rational> build_v_ideal();

// q = nu0 s0 + nu1 s1 + nu2 s2 + nu3 s3 + nu4 sum (-1)^a y_abcd.
template <alg::Field F>
Poly<typename F::Elem> build_q(const F& field, const FamilyParams<typename F::Elem>& p) {
  Poly<typename F::Elem> q(alg::Ambient::xy());
  for (int i = 0; i < 4; ++i) q += alg::convert(s_form(i), field) * p.nu[static_cast<std::size_t>(i)];
  q += alg::convert(invariant_y(), field) * p.nu[4];
  return q;
}

template <alg::Field F>
IdealPresentation<typename F::Elem> build_t_ideal(const F& field,
                                                  const FamilyParams<typename F::Elem>& p) {
  if (p.all_zero()) throw std::invalid_argument("nu must not be all zero");
  IdealPresentation<typename F::Elem> out;
  out.name = "T";
  for (const auto& g : build_unprojection_ideal().generators) {
    out.generators.push_back({g.name, alg::convert(g.poly, field), g.provenance});
  }
  out.generators.push_back(
      {"hyperplane", alg::convert(hyperplane(), field), Provenance::kHyperplane});
  out.generators.push_back({"q", build_q(field, p), Provenance::kQuadricSection});
  out.params = p;
  return out;
}

// degenerate(nu): nu1 nu2 nu3 = 0, or nu0 - nu1 - nu2 - nu3 + delta nu4 = 0
// for some delta = m * i with m in delta_multiples.
template <alg::Field F>
bool is_degenerate(const F& field, const FamilyParams<typename F::Elem>& p,
                   const std::vector<long long>& delta_multiples) {
  const auto& n = p.nu;
  if ((n[1] * n[2] * n[3]).is_zero()) return true;
  auto base = n[0] - n[1] - n[2] - n[3];
  for (long long m : delta_multiples) {
    if ((base + field.from_int(m) * field.i() * n[4]).is_zero()) return true;
  }
  return false;
}

// The four ways of writing phi_abcd as a monomial over one x variable.
struct UnprojectionDatum {
  struct Representation {
    alg::Monomial numerator;
    int denominator;  // variable index
  };
  Index4 index;
  std::array<Representation, 4> reps;
};

std::vector<UnprojectionDatum> unprojection_data();

}  // namespace upv::unproj

#endif  // UPV_UNPROJ_IDEALS_HPP_
