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
#include <vector>

#include "upv/bicanon/bicanon.hpp"
#include "upv/bicanon/burniat.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/grouprep/grouprep.hpp"

namespace upv::bicanon {
namespace {

using alg::Rational;

unproj::FamilyParams<Zp> generic(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, f.p() - 1);
  unproj::FamilyParams<Zp> p;
  do {
    for (auto& v : p.nu) v = Zp(d(rng), f.p());
  } while ((p.nu[0] + p.nu[1] + p.nu[2] + p.nu[3]).is_zero());
  return p;
}

// S3 written out directly: 8 nu4^2 prod (s_i - s0) - s0 l^2.
Zp cubic_at(const PrimeField& f, const unproj::FamilyParams<Zp>& p, const SPoint& s) {
  Zp l = f.zero();
  for (std::size_t i = 0; i < 4; ++i) l += p.nu[i] * s[i];
  return f.from_int(8) * p.nu[4] * p.nu[4] * (s[1] - s[0]) * (s[2] - s[0]) * (s[3] - s[0]) - s[0] * l * l;
}

TEST(Cubic, PolynomialMatchesFormula) {
  PrimeField f(29);
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<std::uint64_t> d(0, 28);
  for (int k = 0; k < 200; ++k) {
    auto p = generic(f, rng);
    SPoint s{Zp(d(rng), 29), Zp(d(rng), 29), Zp(d(rng), 29), Zp(d(rng), 29)};
    EXPECT_EQ(alg::evaluate(s_cubic(f, p), std::vector<Zp>(s.begin(), s.end()), f.one()), cubic_at(f, p, s));
  }
}

// A node is a point where F(n + t v) vanishes to order two in t for every v.
// The first two Taylor coefficients come from values at t = 0..3.
TEST(Cubic, NodesAreDoublePoints) {
  PrimeField f(29);
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<std::uint64_t> d(0, 28);
  const Zp inv6 = Zp(6, 29).inverse();
  for (int k = 0; k < 30; ++k) {
    auto p = generic(f, rng);
    for (int i = 1; i <= 3; ++i) {
      auto n = node(f, p, i);
      ASSERT_TRUE(n.has_value());
      for (int trial = 0; trial < 5; ++trial) {
        SPoint v{Zp(d(rng), 29), Zp(d(rng), 29), Zp(d(rng), 29), Zp(d(rng), 29)};
        std::array<Zp, 4> val;
        for (int t = 0; t < 4; ++t) {
          SPoint q;
          for (std::size_t c = 0; c < 4; ++c) q[c] = (*n)[c] + f.from_int(t) * v[c];
          val[static_cast<std::size_t>(t)] = cubic_at(f, p, q);
        }
        EXPECT_TRUE(val[0].is_zero());
        Zp c1 = (f.from_int(-11) * val[0] + f.from_int(18) * val[1] - f.from_int(9) * val[2] +
                 f.from_int(2) * val[3]) *
                inv6;
        EXPECT_TRUE(c1.is_zero()) << "n" << i;
      }
    }
  }
}

TEST(Cubic, TPointsMapIntoS3) {
  PrimeField f(13);
  std::mt19937_64 rng(53);
  auto p = cover::draw_params(f, rng);
  auto pts = cover::image_points(f, cover::enumerate_surface(f, p));
  ASSERT_FALSE(pts.empty());
  for (const auto& pt : pts) {
    auto s = s_coordinates(f, pt);
    if (!s) continue;
    EXPECT_TRUE(cubic_at(f, p, *s).is_zero()) << pt.to_string();
  }
}

// On s_i = -s0 the cubic restricts to -s0 times the conic
// 16 nu4^2 (s_j - s0)(s_k - s0) + l^2.
TEST(PlaneSections, ConicFactor) {
  PrimeField f(17);
  std::mt19937_64 rng(54);
  std::uniform_int_distribution<std::uint64_t> d(0, 16);
  for (int k = 0; k < 200; ++k) {
    auto p = generic(f, rng);
    for (int i = 1; i <= 3; ++i) {
      SPoint s{Zp(d(rng), 17), Zp(d(rng), 17), Zp(d(rng), 17), Zp(d(rng), 17)};
      s[static_cast<std::size_t>(i)] = -s[0];
      int j = i % 3 + 1, m = (i + 1) % 3 + 1;
      Zp l = f.zero();
      for (std::size_t c = 0; c < 4; ++c) l += p.nu[c] * s[c];
      Zp conic = f.from_int(16) * p.nu[4] * p.nu[4] * (s[static_cast<std::size_t>(j)] - s[0]) *
                     (s[static_cast<std::size_t>(m)] - s[0]) +
                 l * l;
      EXPECT_EQ(cubic_at(f, p, s), -s[0] * conic);
      EXPECT_EQ(on_conic(f, p, s, i), conic.is_zero());
    }
  }
}

TEST(SquaringIdentity, ResidualVanishes) {
  PrimeField f(13);
  std::mt19937_64 rng(55);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(squaring_residual(f, generic(f, rng)).is_zero());
}

TEST(Burniat, NodeSetHas24Points) {
  auto nodes = node_set();
  EXPECT_EQ(nodes.size(), 24u);
  auto g1 = f1(), g2 = f2();
  alg::GaussianField gf;
  auto h1 = alg::convert(g1, gf), h2 = alg::convert(g2, gf);
  for (const auto& n : nodes) {
    std::vector<alg::GaussRational> pt(n.begin(), n.end());
    for (const auto& g : {h1, h2}) {
      EXPECT_TRUE(alg::evaluate(g, pt, gf.one()).is_zero());
      for (int v = 0; v < 3; ++v) EXPECT_TRUE(alg::evaluate(g.derivative(v), pt, gf.one()).is_zero());
    }
  }
}

TEST(Burniat, ParameterMapNormalization) {
  for (long long lam : {-4LL, -9LL, 2LL, 5LL, -2LL}) {
    auto m = parameter_map(Rational(lam));
    Rational shift = Rational(lam) + Rational(1);
    EXPECT_EQ(m.nu4_squared, shift * shift / Rational(16)) << lam;
    EXPECT_EQ(m.reference_nu4_squared, Rational(16) * shift * shift) << lam;
  }
  auto m = parameter_map(Rational(-4));
  ASSERT_TRUE(m.nu.has_value());
  EXPECT_EQ(*m.nu, Rational(2));
  ASSERT_TRUE(m.nu4.has_value());
  EXPECT_EQ(*m.nu4 * *m.nu4, Rational(9, 16));
  for (long long bad : {0LL, 1LL, -1LL}) EXPECT_THROW(parameter_map(Rational(bad)), std::exception);
}

TEST(Burniat, LambdaIdentity) { EXPECT_TRUE(lambda_identity_residual().is_zero()); }

TEST(Checks, BurniatChecksPass) {
  for (auto r : {check_burniat_nodes(), check_charts(), check_f3(), check_parameter_map(Rational(-4))}) {
    EXPECT_TRUE(r.passed()) << r.to_line();
  }
}

TEST(Checks, SingularPointsFollowTheResidueClass) {
  for (std::uint64_t q : {13ull, 17ull}) {
    auto r = check_singular_points(q, 0);
    EXPECT_TRUE(r.passed()) << r.to_line();
    EXPECT_EQ(r.witness["node_fibres_rational"], q % 8 == 1);
  }
}

}  // namespace
}  // namespace upv::bicanon
