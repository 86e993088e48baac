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


#include "upv/unproj/ideals.hpp"

#include <stdexcept>

namespace upv::unproj {

using alg::Ambient;
using alg::Monomial;
using alg::comp;
using alg::unit_monomial;
using alg::x_var;
using alg::y_var;

namespace {

const Ambient& xy() { return Ambient::xy(); }

Poly<Rational> var(int v) { return Poly<Rational>::variable(xy(), v, Rational(1)); }

// Numerator of phi_abcd when the denominator is x_{i, abcd_i}.
Monomial phi_numerator(const Index4& abcd, int i) {
  Monomial m;
  for (int k = 0; k < 4; ++k) {
    if (k != i) m[x_var(k, comp(abcd[static_cast<std::size_t>(k)]))] += 1;
  }
  return m;
}

std::string idx(const Index4& a) { return alg::index_string(a); }

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kQuadric: return "quadric";
    case Provenance::kCubic: return "cubic";
    case Provenance::kQuartic: return "quartic";
    case Provenance::kHyperplane: return "hyperplane";
    case Provenance::kQuadricSection: return "quadric-section";
  }
  return "unknown";
}

Poly<Rational> x_quadric(int k) {
  if (k < 0 || k > 2) throw std::out_of_range("quadric index");
  return var(x_var(k, 0)) * var(x_var(k, 1)) - var(x_var(k + 1, 0)) * var(x_var(k + 1, 1));
}

Poly<Rational> cubic(const Index4& abcd, int i) {
  Monomial lhs = unit_monomial(y_var(abcd)) * unit_monomial(x_var(i, abcd[static_cast<std::size_t>(i)]));
  Poly<Rational> p = Poly<Rational>::monomial(xy(), lhs, Rational(1));
  p -= Poly<Rational>::monomial(xy(), phi_numerator(abcd, i), Rational(1));
  return p;
}

std::pair<int, int> quartic_witness(const Index4& a, const Index4& b) {
  int first = -1;
  for (int k = 0; k < 4; ++k) {
    if (a[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)]) continue;
    if (first < 0) {
      first = k;
    } else {
      return {first, k};
    }
  }
  throw std::invalid_argument("indices " + idx(a) + ", " + idx(b) + " differ in fewer than two places");
}

Poly<Rational> quartic_with_witness(const Index4& a, const Index4& b, int i, int j) {
  Monomial num = phi_numerator(a, i) * phi_numerator(b, j);
  Monomial den = unit_monomial(x_var(i, a[static_cast<std::size_t>(i)])) *
                 unit_monomial(x_var(j, b[static_cast<std::size_t>(j)]));
  if (!alg::divides(den, num)) {
    throw std::logic_error("quartic for " + idx(a) + "," + idx(b) + " does not clear denominators");
  }
  Poly<Rational> p = var(y_var(a)) * var(y_var(b));
  p -= Poly<Rational>::monomial(xy(), num / den, Rational(1));
  return p;
}

Poly<Rational> quartic(const Index4& a, const Index4& b) {
  auto [i, j] = quartic_witness(a, b);
  return quartic_with_witness(a, b, i, j);
}

Poly<Rational> hyperplane() { return var(x_var(0, 0)) + var(x_var(0, 1)); }

Poly<Rational> s_form(int i) {
  return (var(x_var(i, 0)) * var(x_var(i, 0)) + var(x_var(i, 1)) * var(x_var(i, 1))) *
         Rational(1, 2);
}

Poly<Rational> y_character_sum(const std::array<int, 3>& k) {
  Poly<Rational> p(xy());
  for (const auto& t : alg::ell()) {
    int e = k[0] * t[1] + k[1] * t[2] + k[2] * t[3];
    p.add_term(unit_monomial(y_var(t)), Rational(e % 2 ? -1 : 1));
  }
  return p;
}

Poly<Rational> invariant_y() {
  Poly<Rational> p(xy());
  for (const auto& t : alg::ell()) p.add_term(unit_monomial(y_var(t)), Rational(t[0] ? -1 : 1));
  return p;
}

IdealPresentation<Rational> build_x_ideal() {
  IdealPresentation<Rational> out;
  out.name = "X";
  for (int k = 0; k < 3; ++k) {
    out.generators.push_back({"quadric_" + std::to_string(k), x_quadric(k), Provenance::kQuadric});
  }
  return out;
}

IdealPresentation<Rational> build_unprojection_ideal() {
  IdealPresentation<Rational> out = build_x_ideal();
  out.name = "Y";
  const auto& L = alg::ell();
  for (const auto& t : L) {
    for (int i = 0; i < 4; ++i) {
      out.generators.push_back(
          {"cubic_" + idx(t) + "_" + std::to_string(i), cubic(t, i), Provenance::kCubic});
    }
  }
  for (std::size_t p = 0; p < L.size(); ++p) {
    for (std::size_t r = p + 1; r < L.size(); ++r) {
      out.generators.push_back({"quartic_" + idx(L[p]) + "_" + idx(L[r]), quartic(L[p], L[r]),
                                Provenance::kQuartic});
    }
  }
  return out;
}

IdealPresentation<Rational> build_v_ideal() {
  IdealPresentation<Rational> out = build_unprojection_ideal();
  out.name = "V";
  out.generators.push_back({"hyperplane", hyperplane(), Provenance::kHyperplane});
  return out;
}

// The quadrics have pairwise coprime leading terms x_i0 x_i1 (i < 3) under
// lex order, so the rules x_i0 x_i1 -> x30 x31 give a Groebner normal form.
Poly<Rational> reduce_mod_x_quadrics(const Poly<Rational>& f) {
  Poly<Rational> out(f.ambient());
  std::vector<std::pair<alg::Monomial, Rational>> work(f.terms().begin(), f.terms().end());
  while (!work.empty()) {
    auto [m, c] = work.back();
    work.pop_back();
    bool rewritten = false;
    for (int i = 0; i < 3 && !rewritten; ++i) {
      if (m[x_var(i, 0)] > 0 && m[x_var(i, 1)] > 0) {
        m[x_var(i, 0)] -= 1;
        m[x_var(i, 1)] -= 1;
        m[x_var(3, 0)] += 1;
        m[x_var(3, 1)] += 1;
        work.emplace_back(m, c);
        rewritten = true;
      }
    }
    if (!rewritten) out.add_term(m, c);
  }
  return out;
}

bool in_x_quadric_ideal(const Poly<Rational>& f) { return reduce_mod_x_quadrics(f).is_zero(); }

std::vector<UnprojectionDatum> unprojection_data() {
  std::vector<UnprojectionDatum> out;
  for (const auto& t : alg::ell()) {
    UnprojectionDatum d;
    d.index = t;
    for (int i = 0; i < 4; ++i) {
      d.reps[static_cast<std::size_t>(i)] = {phi_numerator(t, i),
                                             x_var(i, t[static_cast<std::size_t>(i)])};
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace upv::unproj
