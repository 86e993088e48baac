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


#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/unproj/checks.hpp"
#include "upv/unproj/ideals.hpp"
#include "upv/unproj/rewriting.hpp"

namespace upv::unproj {
namespace {

using alg::Ambient;
using alg::Monomial;
using alg::Zp;

TEST(Census, GeneratorCountsAndDegrees) {
  auto j = build_unprojection_ideal();
  EXPECT_EQ(j.count(Provenance::kQuadric), 3u);
  EXPECT_EQ(j.count(Provenance::kCubic), 32u);
  EXPECT_EQ(j.count(Provenance::kQuartic), 28u);
  EXPECT_EQ(j.size(), 63u);
  for (const auto& g : j.generators) {
    int want = g.provenance == Provenance::kQuadric ? 2 : g.provenance == Provenance::kCubic ? 3 : 4;
    EXPECT_EQ(g.poly.homogeneous_degree(), want) << g.name;
  }
}

// Every generator of J vanishes on sigma(P^1 x P^1 x P^1 x P^1), checked at
// random points with raw modular evaluation.
TEST(Census, GeneratorsVanishOnTheSigmaImage) {
  const std::uint64_t p = 1000033;
  alg::PrimeField f(p);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  auto j = build_unprojection_ideal();
  for (int k = 0; k < 20; ++k) {
    cover::P1x4Point<Zp> pt;
    for (auto& q : pt) q = {Zp(d(rng), p), Zp(d(rng), p)};
    auto coords = cover::sigma_coordinates(f, pt);
    std::vector<std::uint64_t> raw;
    for (const auto& c : coords) raw.push_back(c.value());
    for (const auto& g : j.generators) EXPECT_EQ(oracle::eval_mod_p(g.poly, raw, p), 0u) << g.name;
  }
}

TEST(QuadricSection, MatchesItsDefinition) {
  const std::uint64_t p = 29;
  alg::PrimeField f(p);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  for (int k = 0; k < 50; ++k) {
    FamilyParams<Zp> nu;
    for (auto& v : nu.nu) v = Zp(d(rng), p);
    auto q = build_q(f, nu);
    std::vector<Zp> pt;
    for (int v = 0; v < 16; ++v) pt.emplace_back(d(rng), p);
    // nu0 s0 + ... + nu3 s3 + nu4 sum (-1)^a y_abcd, s_i = (x_i0^2 + x_i1^2)/2.
    Zp half = Zp(2, p).inverse(), want = f.zero();
    for (int i = 0; i < 4; ++i) {
      want += nu.nu[i] * half * (pt[2 * i] * pt[2 * i] + pt[2 * i + 1] * pt[2 * i + 1]);
    }
    for (const auto& t : alg::ell()) {
      Zp y = pt[static_cast<std::size_t>(alg::y_var(t))];
      want += t[0] ? -nu.nu[4] * y : nu.nu[4] * y;
    }
    EXPECT_EQ(alg::evaluate(q, pt, f.one()), want);
  }
}

TEST(PlaneIncidences, RanksFromCoordinateSupport) {
  const auto& L = alg::ell();
  int lines = 0, empty = 0;
  for (std::size_t a = 0; a < L.size(); ++a) {
    for (std::size_t b = a + 1; b < L.size(); ++b) {
      // Each plane is cut out by four coordinates; the pair spans the union.
      std::set<int> support;
      for (int i = 0; i < 4; ++i) {
        support.insert(alg::x_var(i, L[a][static_cast<std::size_t>(i)]));
        support.insert(alg::x_var(i, L[b][static_cast<std::size_t>(i)]));
      }
      auto m = plane_equations(L[a]);
      auto n = plane_equations(L[b]);
      m.insert(m.end(), n.begin(), n.end());
      EXPECT_EQ(alg::rank(m), support.size());
      lines += support.size() == 6;
      empty += support.size() == 8;
    }
  }
  EXPECT_EQ(lines, 24);
  EXPECT_EQ(empty, 4);
}

// det of the Jacobian block at random points equals a fixed sign times y^11.
TEST(JacobianMinor, AgreesWithPointwiseDeterminant) {
  const std::uint64_t p = 1000033;
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint64_t> d(1, p - 1);
  for (const auto& t : alg::ell()) {
    auto block = jacobian_block(t);
    ASSERT_EQ(block.size(), 12u);
    int sign = 0;
    for (int k = 0; k < 5; ++k) {
      std::vector<std::uint64_t> pt;
      for (int v = 0; v < 16; ++v) pt.push_back(d(rng));
      std::vector<std::vector<std::uint64_t>> m;
      for (const auto& row : block) {
        std::vector<std::uint64_t> r;
        for (const auto& e : row) r.push_back(oracle::eval_mod_p(e, pt, p));
        m.push_back(r);
      }
      std::uint64_t det = oracle::det_mod_p(m, p);
      std::uint64_t y11 = oracle::powmod(pt[static_cast<std::size_t>(alg::y_var(t))], 11, p);
      int s = det == y11 ? 1 : det == (p - y11) % p ? -1 : 0;
      ASSERT_NE(s, 0) << alg::index_string(t);
      if (sign == 0) sign = s;
      EXPECT_EQ(s, sign) << alg::index_string(t);
    }
  }
}

alg::Poly<Rational> random_xy(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> var(0, 15), c(-5, 5), e(0, 3);
  alg::Poly<Rational> f(Ambient::xy());
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int j = 0; j < 3; ++j) m[var(rng)] += static_cast<std::int16_t>(e(rng));
    f.add_term(m, Rational(c(rng)));
  }
  return f;
}

TEST(Rewriting, IdempotentAndLinear) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 200; ++k) {
    auto f = random_xy(rng, 6), g = random_xy(rng, 6);
    auto rf = reduce_by_rewriting(f);
    EXPECT_EQ(reduce_by_rewriting(rf), rf);
    EXPECT_EQ(reduce_by_rewriting(f + g), rf + reduce_by_rewriting(g));
  }
}

TEST(Rewriting, RejectsForeignAmbient) {
  alg::Poly<Rational> f(Ambient::t4());
  EXPECT_THROW(reduce_by_rewriting(f), alg::AmbientMismatch);
}

TEST(Checks, StructuralChecksPass) {
  for (auto r : {check_x_ideal(), check_census(), check_master_pullback(), check_phi_consistency(),
                 check_quartic_witness(), check_veronese_chart(), check_elimination_cubic(), check_t_ideal()}) {
    EXPECT_TRUE(r.passed()) << r.to_line();
  }
}

}  // namespace
}  // namespace upv::unproj
