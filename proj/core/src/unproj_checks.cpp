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


#include "upv/unproj/checks.hpp"

#include <set>

#include "upv/cover/sigma.hpp"
#include "upv/grouprep/grouprep.hpp"
#include "upv/unproj/rewriting.hpp"

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

std::string idx(const Index4& a) { return alg::index_string(a); }

bool all_vanish_under_sigma(const IdealPresentation<Rational>& ideal, CheckReport& r) {
  const auto& s = cover::sigma_map();
  bool ok = true;
  for (const auto& g : ideal.generators) {
    if (!s(g.poly).is_zero()) {
      r.fail("sigma# does not kill " + g.name);
      ok = false;
    }
  }
  return ok;
}

// Unit tuple nu = e_k.
FamilyParams<Rational> unit_params(int k) {
  FamilyParams<Rational> p;
  for (auto& v : p.nu) v = Rational(0);
  p.nu[static_cast<std::size_t>(k)] = Rational(1);
  return p;
}

}  // namespace

alg::Matrix<Rational> plane_equations(const Index4& abcd) {
  alg::Matrix<Rational> rows;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rational> row(8, Rational(0));
    row[static_cast<std::size_t>(x_var(i, abcd[static_cast<std::size_t>(i)]))] = Rational(1);
    rows.push_back(row);
  }
  return rows;
}

alg::Matrix<Poly<Rational>> jacobian_block(const Index4& abcd) {
  std::vector<Poly<Rational>> eqs = {hyperplane()};
  std::vector<int> cols = {x_var(0, comp(abcd[0]))};
  const auto& L = alg::ell();
  for (const auto& t : L) {
    if (t == abcd) continue;
    eqs.push_back(alg::ell_position(t) < alg::ell_position(abcd) ? quartic(t, abcd) : quartic(abcd, t));
    cols.push_back(y_var(t));
  }
  for (int i = 0; i < 4; ++i) {
    eqs.push_back(cubic(abcd, i));
    cols.push_back(x_var(i, abcd[static_cast<std::size_t>(i)]));
  }
  alg::Matrix<Poly<Rational>> m;
  for (const auto& e : eqs) {
    std::vector<Poly<Rational>> row;
    for (int c : cols) row.push_back(e.derivative(c));
    m.push_back(row);
  }
  return m;
}

std::array<std::array<Poly<Rational>, 4>, 4> veronese_matrix() {
  const int diag[4] = {y_var({1, 1, 0, 0}), y_var({0, 1, 1, 0}), y_var({0, 1, 0, 1}), y_var({1, 1, 1, 1})};
  // Upper triangle, row-major.
  const int off[6] = {x_var(3, 1), x_var(2, 1), x_var(0, 0), x_var(0, 1), x_var(2, 0), x_var(3, 0)};
  std::array<std::array<Poly<Rational>, 4>, 4> m{{
      {Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy())},
      {Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy())},
      {Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy())},
      {Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy()), Poly<Rational>(xy())},
  }};
  int k = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    m[r][r] = var(diag[r]);
    for (std::size_t c = r + 1; c < 4; ++c) {
      m[r][c] = var(off[k++]);
      m[c][r] = m[r][c];
    }
  }
  return m;
}

std::vector<Poly<Rational>> veronese_minors() {
  auto m = veronese_matrix();
  std::vector<Poly<Rational>> out;
  for (std::size_t r1 = 0; r1 < 4; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < 4; ++r2)
      for (std::size_t c1 = 0; c1 < 4; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < 4; ++c2) {
          Poly<Rational> minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
          out.push_back(minor.is_zero() ? minor : alg::homogenize(minor, x_var(1, 0)));
        }
  return out;
}

Poly<Rational> elimination_cubic(const FamilyParams<Rational>& p, int sign) {
  Poly<Rational> l(xy());
  for (int i = 0; i < 4; ++i) l += s_form(i) * p.nu[static_cast<std::size_t>(i)];
  Poly<Rational> prod = Poly<Rational>::constant(xy(), Rational(1));
  for (int i = 1; i < 4; ++i) prod = prod * (var(x_var(i, 0)) + var(x_var(i, 1)));
  return reduce_by_rewriting(var(x_var(0, 0)) * l) + prod * (p.nu[4] * Rational(sign));
}

// ---------------------------------------------------------------------------

CheckReport check_x_ideal() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.x_ideal";
  auto x = build_x_ideal();
  r.expect(x.size() == 3, "X needs exactly 3 quadrics");
  for (const auto& g : x.generators) {
    r.expect(g.poly.homogeneous_degree() == 2, g.name + " is not a quadric");
  }
  all_vanish_under_sigma(x, r);
  auto polys = x.polys();
  for (const auto& g : grouprep::generator_actions()) {
    for (const auto& p : polys) {
      auto img = g.map(p);
      bool found = false;
      for (const auto& q : polys) found = found || img == q || img == -q;
      r.expect(found, g.name() + " moves a quadric outside the generator set");
    }
  }
  r.witness["generators"] = x.size();
  sw.stamp(r);
  return r;
}

CheckReport check_census() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.census";
  auto y = build_unprojection_ideal();
  std::size_t nq = y.count(Provenance::kQuadric), nc = y.count(Provenance::kCubic),
              n4 = y.count(Provenance::kQuartic);
  r.witness["quadrics"] = nq;
  r.witness["cubics"] = nc;
  r.witness["quartics"] = n4;
  r.witness["total"] = y.size();
  r.expect(nq == 3 && nc == 32 && n4 == 28 && y.size() == 63, "census is not 3 + 32 + 28");
  for (const auto& g : y.generators) {
    int want = g.provenance == Provenance::kQuadric ? 2 : g.provenance == Provenance::kCubic ? 3 : 4;
    r.expect(g.poly.homogeneous_degree() == want, g.name + " has the wrong weighted degree");
  }
  auto q = quartic({0, 0, 0, 0}, {0, 0, 1, 1});
  auto want = var(y_var({0, 0, 0, 0})) * var(y_var({0, 0, 1, 1})) -
              var(x_var(0, 1)) * var(x_var(0, 1)) * var(x_var(1, 1)) * var(x_var(1, 1));
  r.expect(q == want, "quartic_0000_0011 != y0000 y0011 - x01^2 x11^2");
  r.witness["quartic_0000_0011"] = q.to_string();
  std::set<std::string> names;
  for (const auto& g : y.generators) names.insert(g.name);
  r.expect(names.size() == y.size(), "generator names are not unique");
  sw.stamp(r);
  return r;
}

CheckReport check_master_pullback() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.master_pullback";
  auto y = build_unprojection_ideal();
  bool ok = all_vanish_under_sigma(y, r);
  r.witness["generators_checked"] = y.size();
  r.witness["all_vanish"] = ok;
  r.expect(cover::sigma_map()(hyperplane()) == cover::z1(), "sigma#(x00 + x01) != Z1");
  sw.stamp(r);
  return r;
}

CheckReport check_phi_consistency() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.phi_consistency";
  int pairs = 0;
  for (const auto& d : unprojection_data()) {
    const auto& t = d.index;
    for (std::size_t i = 0; i < 4; ++i) {
      r.expect(d.reps[i].denominator == x_var(static_cast<int>(i), t[i]),
               "denominator of phi_" + idx(t) + " is not x_{i,abcd_i}");
      for (std::size_t j = i + 1; j < 4; ++j) {
        Poly<Rational> diff =
            Poly<Rational>::monomial(xy(), d.reps[i].numerator * unit_monomial(d.reps[j].denominator), Rational(1)) -
            Poly<Rational>::monomial(xy(), d.reps[j].numerator * unit_monomial(d.reps[i].denominator), Rational(1));
        auto quotient = diff.divide_monomial(diff.monomial_content());
        int a = static_cast<int>(i), b = static_cast<int>(j);
        auto quad = var(x_var(a, 0)) * var(x_var(a, 1)) - var(x_var(b, 0)) * var(x_var(b, 1));
        bool ok = quotient && (*quotient == quad || *quotient == -quad);
        r.expect(ok, "phi_" + idx(t) + " representations " + std::to_string(i) + "," + std::to_string(j) +
                         " do not differ by a quadric multiple");
        r.expect(in_x_quadric_ideal(diff), "cross difference of phi_" + idx(t) + " not in the quadric ideal");
        ++pairs;
      }
    }
  }
  r.witness["pairs"] = pairs;
  sw.stamp(r);
  return r;
}

CheckReport check_quartic_witness() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.quartic_witness";
  const auto& L = alg::ell();
  const auto& s = cover::sigma_map();
  int variants = 0, literal = 0, multi = 0;
  for (std::size_t p = 0; p < L.size(); ++p) {
    for (std::size_t q = p + 1; q < L.size(); ++q) {
      auto chosen = quartic(L[p], L[q]);
      std::vector<int> diff;
      for (int k = 0; k < 4; ++k) {
        if (L[p][static_cast<std::size_t>(k)] != L[q][static_cast<std::size_t>(k)]) diff.push_back(k);
      }
      multi += diff.size() > 2;
      for (int i : diff) {
        for (int j : diff) {
          if (i == j) continue;
          auto alt = quartic_with_witness(L[p], L[q], i, j);
          ++variants;
          literal += alt == chosen;
          r.expect(in_x_quadric_ideal(alt - chosen),
                   "witness (" + std::to_string(i) + "," + std::to_string(j) + ") for " + idx(L[p]) + "," +
                       idx(L[q]) + " differs beyond the quadrics");
          r.expect(s(alt).is_zero(), "sigma# does not kill a witness variant");
        }
      }
    }
  }
  r.witness["variants"] = variants;
  r.witness["literally_identical"] = literal;
  r.witness["pairs_with_four_differences"] = multi;
  sw.stamp(r);
  return r;
}

CheckReport check_plane_incidences() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.plane_incidences";
  const auto& L = alg::ell();
  int lines = 0, empty = 0;
  Json line_pairs = Json::array();
  for (std::size_t p = 0; p < L.size(); ++p) {
    for (std::size_t q = p + 1; q < L.size(); ++q) {
      auto m = plane_equations(L[p]);
      auto b = plane_equations(L[q]);
      m.insert(m.end(), b.begin(), b.end());
      std::size_t rk = alg::rank(m);
      bool antipodal = L[q] == alg::complement(L[p]);
      if (rk == 6) {
        ++lines;
        line_pairs.push_back(idx(L[p]) + "," + idx(L[q]));
      } else if (rk == 8) {
        ++empty;
      }
      r.expect(rk == (antipodal ? 8u : 6u), "unexpected rank for " + idx(L[p]) + "," + idx(L[q]));
    }
  }
  r.witness["lines"] = lines;
  r.witness["empty"] = empty;
  r.witness["line_pairs"] = line_pairs;
  r.expect(lines == 24 && empty == 4, "expected 24 lines and 4 empty pairs");
  sw.stamp(r);
  return r;
}

CheckReport check_jacobian_minor() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.jacobian_minor";
  Json dets = Json::object();
  for (const auto& t : alg::ell()) {
    auto det = alg::determinant(jacobian_block(t), Rational(1));
    auto y11 = Poly<Rational>::monomial(xy(), unit_monomial(y_var(t), 11), Rational(1));
    bool ok = det == y11 || det == -y11;
    r.expect(ok, "minor for " + idx(t) + " is " + det.to_string());
    dets[idx(t)] = det.to_string();
    r.expect(det.homogeneous_degree() == 22, "minor for " + idx(t) + " is not of degree 22");
  }
  r.witness["determinants"] = dets;
  sw.stamp(r);
  return r;
}

CheckReport check_veronese_chart() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.veronese_chart";
  auto m = veronese_matrix();
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) r.expect(m[a][b] == m[b][a], "matrix is not symmetric");
  }
  const auto& s = cover::sigma_map();
  auto minors = veronese_minors();
  std::set<std::string> distinct;
  int nonzero = 0;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (minors[k].is_zero()) continue;
    ++nonzero;
    auto d = minors[k];
    distinct.insert(d.to_string());
    r.expect(s(d).is_zero(), "minor " + std::to_string(k) + " = " + d.to_string() + " does not vanish on Y");
  }
  r.witness["minors"] = minors.size();
  r.witness["distinct"] = distinct.size();
  r.witness["chart_variables"] = 10;
  sw.stamp(r);
  return r;
}

CheckReport check_elimination_cubic() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.elimination_cubic";
  // Both sides are linear in nu.
  int held = 0;
  for (int sign : {1, -1}) {
    bool all = true;
    for (int k = 0; k < 5; ++k) {
      auto p = unit_params(k);
      auto lhs = reduce_by_rewriting(var(x_var(0, 0)) * build_q(alg::RationalField{}, p));
      all = all && lhs == elimination_cubic(p, sign);
    }
    if (all) held = sign;
  }
  r.expect(held != 0, "x00*q does not rewrite to the elimination cubic with either sign");
  r.witness["sign"] = held;
  r.witness["form"] = held > 0 ? "x00*l + nu4*prod(x_i0 + x_i1)" : "x00*l - nu4*prod(x_i0 + x_i1)";
  auto x10x11 = reduce_by_rewriting(var(x_var(1, 0)) * var(x_var(1, 1)));
  r.expect(x10x11 == -(var(x_var(0, 0)) * var(x_var(0, 0))), "x10 x11 does not rewrite to -x00^2");
  auto cube = var(x_var(2, 0)).pow(3, Rational(1));
  r.expect(reduce_by_rewriting(cube) == cube, "x20^3 is not irreducible");
  // No weight-2 variable survives.
  FamilyParams<Rational> g;
  g.nu = {Rational(2), Rational(-3), Rational(5), Rational(7), Rational(11)};
  auto cubic_g = reduce_by_rewriting(var(x_var(0, 0)) * build_q(alg::RationalField{}, g));
  bool pure_x = true;
  for (const auto& [mono, c] : cubic_g.terms()) {
    for (int v = 8; v < 16; ++v) pure_x = pure_x && mono[v] == 0;
    pure_x = pure_x && mono[x_var(0, 1)] == 0;
  }
  r.expect(pure_x, "elimination left a y or x01");
  r.expect(cubic_g.homogeneous_degree() == 3, "elimination result is not a cubic");
  sw.stamp(r);
  return r;
}

CheckReport check_t_ideal() {
  Stopwatch sw;
  CheckReport r;
  r.id = "unproj.t_ideal";
  alg::RationalField q;
  FamilyParams<Rational> g;
  g.nu = {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)};
  auto t = build_t_ideal(q, g);
  r.expect(t.size() == 65, "T needs 65 generators");
  r.expect(t.count(Provenance::kHyperplane) == 1 && t.count(Provenance::kQuadricSection) == 1,
           "T needs one hyperplane and one quadric section");
  for (const auto& gen : t.generators) r.expect(gen.poly.is_homogeneous(), gen.name + " is not homogeneous");
  r.expect(build_q(q, unit_params(4)) == invariant_y(), "q(0,0,0,0,1) != sum (-1)^a y_abcd");
  r.expect(build_q(q, unit_params(0)) == s_form(0), "q(1,0,0,0,0) != s0");
  r.witness["generators"] = t.size();
  bool threw = false;
  try {
    FamilyParams<Rational> zero;
    for (auto& v : zero.nu) v = Rational(0);
    (void)build_t_ideal(q, zero);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  r.expect(threw, "nu = 0 was accepted");
  sw.stamp(r);
  return r;
}

}  // namespace upv::unproj
