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

#include <map>
#include <random>
#include <set>
#include <vector>

#include "upv/cover/cover.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/cover/sigma.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::cover {
namespace {

std::vector<P1Point<Zp>> line(const PrimeField& f) {
  std::vector<P1Point<Zp>> out{{f.zero(), f.one()}};
  for (std::uint64_t a = 0; a < f.p(); ++a) out.push_back({f.one(), Zp(a, f.p())});
  return out;
}

// Brute force over all of (P^1)^4: keep the points whose sigma-image lies on
// every generator of T.
std::set<SurfacePoint> brute_force(const PrimeField& f, const unproj::FamilyParams<Zp>& p) {
  auto t = unproj::build_t_ideal(f, p);
  // The hyperplane and q come last and reject most points, so test them first.
  std::vector<alg::Poly<Zp>> gens;
  for (auto it = t.generators.rbegin(); it != t.generators.rend(); ++it) gens.push_back(it->poly);
  auto l = line(f);
  std::set<SurfacePoint> out;
  for (const auto& a : l)
    for (const auto& b : l)
      for (const auto& c : l)
        for (const auto& d : l) {
          P1x4Point<Zp> pt{a, b, c, d};
          auto coords = sigma_coordinates(f, pt);
          bool on = true;
          for (const auto& g : gens) {
            if (!alg::evaluate(g, coords, f.one()).is_zero()) {
              on = false;
              break;
            }
          }
          if (on) out.insert(from_projective(pt));
        }
  return out;
}

TEST(Enumeration, MatchesBruteForce) {
  PrimeField f(13);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 2; ++k) {
    auto p = draw_params(f, rng);
    auto fast = enumerate_surface(f, p);
    auto slow = brute_force(f, p);
    std::set<SurfacePoint> got(fast.points.begin(), fast.points.end());
    EXPECT_EQ(got.size(), fast.points.size()) << "duplicate points";
    EXPECT_EQ(got, slow);
  }
}

TEST(Enumeration, ThreadCountDoesNotMatter) {
  PrimeField f(17);
  std::mt19937_64 rng(32);
  auto p = draw_params(f, rng);
  auto one = enumerate_surface(f, p, 1);
  for (unsigned t : {2u, 3u, 7u}) EXPECT_EQ(enumerate_surface(f, p, t).points, one.points);
}

TEST(Enumeration, PointFileRoundTrip) {
  PrimeField f(13);
  std::mt19937_64 rng(33);
  auto s = enumerate_surface(f, draw_params(f, rng));
  auto back = SurfacePointSet::parse(s.dump());
  EXPECT_EQ(back.q, s.q);
  EXPECT_EQ(back.nu, s.nu);
  EXPECT_EQ(back.points, s.points);
  for (const auto& pt : s.points) {
    EXPECT_TRUE(back.contains(pt));
    EXPECT_EQ(from_projective(to_projective(f, pt)), pt);
  }
}

ProjAut<Zp> identity(const PrimeField& f) { return ProjAut<Zp>::identity(f.one()); }

// Orders and centre computed by composing automorphisms directly, without
// the Cayley table.
TEST(LiftedGroup, IsZ2TimesQ8) {
  PrimeField f(13);
  auto g = lifted_group(f);
  ASSERT_EQ(g.size(), 16u);
  const auto e = identity(f);
  std::map<int, int> orders;
  std::size_t centre = 0;
  for (const auto& a : g.elements()) {
    int n = 1;
    for (auto c = a; !(c == e); c = c * a) ++n;
    ++orders[n];
    bool central = true;
    for (const auto& b : g.elements()) central = central && (a * b == b * a);
    centre += central;
  }
  EXPECT_EQ(orders, (std::map<int, int>{{1, 1}, {2, 3}, {4, 12}}));
  // Z/2 x Q8 has centre Z/2 x Z/2; Z/4 x Z/4 and Z/2 x Z/8 style groups are
  // abelian and D4 x Z/2 has five involutions.
  EXPECT_EQ(centre, 4u);
}

TEST(LiftedGroup, ActionOnPointsIsCompatibleWithComposition) {
  PrimeField f(13);
  auto g = lifted_group(f);
  std::mt19937_64 rng(34);
  auto l = line(f);
  for (int k = 0; k < 500; ++k) {
    P1x4Point<Zp> pt;
    for (auto& q : pt) q = l[rng() % l.size()];
    const auto& a = g.element(rng() % g.size());
    const auto& b = g.element(rng() % g.size());
    auto lhs = (a * b).apply(pt);
    EXPECT_TRUE(same_point(lhs, a.apply(b.apply(pt))) || same_point(lhs, b.apply(a.apply(pt))));
  }
}

// Freeness by direct comparison of every point with every translate.
TEST(LiftedGroup, ActsFreelyOnGenericMembers) {
  PrimeField f(13);
  auto g = lifted_group(f);
  std::mt19937_64 rng(35);
  auto p = draw_params(f, rng);
  auto s = enumerate_surface(f, p);
  ASSERT_FALSE(s.points.empty());
  std::set<SurfacePoint> set(s.points.begin(), s.points.end());
  for (const auto& sp : s.points) {
    auto pt = to_projective(f, sp);
    for (std::size_t k = 1; k < g.size(); ++k) {
      auto img = g.element(k).apply(pt);
      EXPECT_FALSE(same_point(img, pt)) << g.element(k).to_string();
      EXPECT_TRUE(set.count(from_projective(img)));
    }
  }
}

TEST(Sigma, Z1IsThePulledBackHyperplane) {
  EXPECT_EQ(sigma_map()(unproj::hyperplane()), z1());
}

TEST(Checks, CoverChecksPass) {
  for (auto r : {check_sigma(), check_branch_structure(), check_lifts()}) EXPECT_TRUE(r.passed()) << r.to_line();
}

}  // namespace
}  // namespace upv::cover
