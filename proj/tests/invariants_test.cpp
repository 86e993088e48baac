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

#include <array>
#include <map>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/invariants/invariants.hpp"
#include "upv/unproj/ideals.hpp"

namespace upv::invariants {
namespace {

using alg::Ambient;
using alg::Zp;

TEST(Monomials, CountMatchesStarsAndBars) {
  const auto& xy = Ambient::xy();
  std::vector<int> x{0, 1, 2, 3, 4, 5, 6, 7};
  for (int d = 0; d <= 6; ++d) {
    EXPECT_EQ(static_cast<std::int64_t>(weighted_monomials(xy, x, d).size()), oracle::binomial(d + 7, 7));
  }
  // 8 weight-one and 8 weight-two variables: sum over the y-degree.
  std::vector<int> all;
  for (int v = 0; v < 16; ++v) all.push_back(v);
  for (int d = 0; d <= 5; ++d) {
    std::int64_t want = 0;
    for (int k = 0; 2 * k <= d; ++k) want += oracle::binomial(k + 7, 7) * oracle::binomial(d - 2 * k + 7, 7);
    EXPECT_EQ(static_cast<std::int64_t>(weighted_monomials(xy, all, d).size()), want);
  }
}

TEST(Series, CompleteIntersectionOfThreeQuadrics) {
  auto want = oracle::ci_series({2, 2, 2}, 8, 6);
  auto got = complete_intersection_series(6);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t d = 0; d < want.size(); ++d) EXPECT_EQ(got[d], want[d]) << "d = " << d;
  auto hx = hilbert_x(13, 6);
  for (std::size_t d = 0; d < want.size(); ++d) EXPECT_EQ(static_cast<std::int64_t>(hx.h[d]), want[d]);
}

// Dense rank of all degree-d multiples, built without the streaming echelon.
std::size_t dense_hilbert(const std::vector<alg::Poly<Zp>>& gens, const std::vector<int>& vars, int d,
                          std::uint64_t p) {
  const auto& amb = gens.front().ambient();
  auto basis = weighted_monomials(amb, vars, d);
  std::map<alg::Monomial, std::size_t> col;
  for (std::size_t k = 0; k < basis.size(); ++k) col[basis[k]] = k;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : gens) {
    auto gd = g.homogeneous_degree();
    if (!gd || *gd > d) continue;
    for (const auto& m : weighted_monomials(amb, vars, d - *gd)) {
      std::vector<std::uint64_t> row(basis.size(), 0);
      bool inside = true;
      for (const auto& [gm, c] : g.terms()) {
        auto it = col.find(gm * m);
        if (it == col.end()) {
          inside = false;
          break;
        }
        row[it->second] = c.value();
      }
      if (inside) rows.push_back(row);
    }
  }
  return basis.size() - oracle::rank_mod_p(rows, p);
}

TEST(Hilbert, StreamingRankMatchesDenseRank) {
  const std::uint64_t p = 13;
  alg::PrimeField f(p);
  std::mt19937_64 rng(41);
  auto nu = cover::draw_params(f, rng);
  auto t = unproj::build_t_ideal(f, nu);
  std::vector<alg::Poly<Zp>> gens;
  for (const auto& g : t.generators) gens.push_back(g.poly);
  std::vector<int> vars;
  for (int v = 0; v < 16; ++v) vars.push_back(v);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(hilbert_value(gens, vars, d, p), dense_hilbert(gens, vars, d, p)) << d;
}

TEST(Hilbert, PlurigeneraOfT) {
  EXPECT_EQ(plurigenus_expected(2), 32);
  EXPECT_EQ(plurigenus_expected(3), 80);
  EXPECT_EQ(plurigenus_expected(4), 152);
  alg::PrimeField f(17);
  std::mt19937_64 rng(42);
  auto h = hilbert_t(17, cover::draw_params(f, rng), 4);
  EXPECT_EQ(h.h, (std::vector<std::size_t>{1, 7, 32, 80, 152}));
}

// Coefficient of h1 h2 h3 h4 in a product of four divisor classes on
// (P^1)^4, by expanding over which factor contributes which h_i.
std::int64_t brute_top(const std::vector<std::array<int, 4>>& classes) {
  std::int64_t total = 0;
  std::array<int, 4> pick{};
  for (pick[0] = 0; pick[0] < 4; ++pick[0])
    for (pick[1] = 0; pick[1] < 4; ++pick[1])
      for (pick[2] = 0; pick[2] < 4; ++pick[2])
        for (pick[3] = 0; pick[3] < 4; ++pick[3]) {
          bool distinct = true;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) distinct = distinct && pick[a] != pick[b];
          if (!distinct) continue;
          std::int64_t t = 1;
          for (int k = 0; k < 4; ++k) t *= classes[k][pick[k]];
          total += t;
        }
  return total;
}

TEST(Intersection, MatchesBruteExpansion) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int k = 0; k < 200; ++k) {
    std::vector<std::array<int, 4>> cls(4);
    std::vector<IntersectionClass> ic;
    for (auto& c : cls) {
      for (auto& v : c) v = d(rng);
      ic.push_back(IntersectionClass::multidegree(c));
    }
    EXPECT_EQ(intersection_number(ic), brute_top(cls));
  }
  auto H = IntersectionClass::hyperplane();
  EXPECT_EQ(intersection_number({H, H, H, H}), 24);
  EXPECT_EQ(intersection_number({H, H, H, 2 * H}), 48);
  EXPECT_THROW(intersection_number({H, H}), std::exception);
}

TEST(Checks, IntersectionWitness) {
  auto r = check_intersection();
  ASSERT_TRUE(r.passed()) << r.to_line();
  EXPECT_EQ(r.witness["H^4"], 24);
  EXPECT_EQ(r.witness["deg_Y"], 12);
  EXPECT_EQ(r.witness["minus_K_V_cubed"], 12);
  EXPECT_EQ(r.witness["K_T_squared"], 24);
}

}  // namespace
}  // namespace upv::invariants
