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

#include "upv/cover/enumerate.hpp"
#include "upv/grouprep/grouprep.hpp"

namespace upv::grouprep {
namespace {

using alg::Ambient;
using alg::Monomial;

TEST(Words, StringRoundTrip) {
  for (int w = 0; w < 64; ++w) {
    auto word = static_cast<Word>(w);
    EXPECT_EQ(parse_word(word_string(word)), word);
    EXPECT_EQ(word_length(word), __builtin_popcount(static_cast<unsigned>(w)));
  }
}

// The actions compose like the group law up to an overall sign on each
// variable, checked on every ordered pair of words.
TEST(Action, IsAHomomorphismUpToSign) {
  const auto& xy = Ambient::xy();
  std::vector<SignedAction> acts;
  for (int w = 0; w < 64; ++w) acts.push_back(action(static_cast<Word>(w)));
  for (int a = 0; a < 64; ++a) {
    for (int b = 0; b < 64; ++b) {
      const auto& ab = acts[static_cast<std::size_t>(a ^ b)];
      for (int v = 0; v < xy.size(); ++v) {
        auto lhs = acts[a].map(acts[b].map(alg::Poly<Rational>::variable(xy, v, Rational(1))));
        auto rhs = ab.map.image_poly(v);
        EXPECT_TRUE(lhs == rhs || lhs == -rhs) << word_string(acts[a].word) << " " << word_string(acts[b].word);
      }
    }
  }
}

TEST(Action, GeneratorsAreInvolutionsOnX) {
  const auto& xy = Ambient::xy();
  for (int w = 1; w < 64; ++w) {
    auto g = action(static_cast<Word>(w));
    for (int v = 0; v < 8; ++v) {
      auto x = alg::Poly<Rational>::variable(xy, v, Rational(1));
      EXPECT_EQ(g.map(g.map(x)), x);
    }
  }
}

TEST(Subgroups, OrdersAndThetaPartition) {
  auto g = subgroup_g(), h = subgroup_h();
  EXPECT_EQ(g.size(), 8u);
  EXPECT_EQ(h.size(), 32u);
  std::set<Word> hs(h.begin(), h.end());
  for (auto w : g) EXPECT_TRUE(hs.count(w));
  // G is closed under the group law.
  std::set<Word> gs(g.begin(), g.end());
  for (auto a : g)
    for (auto b : g) EXPECT_TRUE(gs.count(static_cast<Word>(a ^ b)));
  std::set<Word> seen;
  for (int i = 1; i <= 3; ++i) {
    auto t = theta_class(i);
    EXPECT_EQ(t.size(), 8u);
    for (auto w : t) {
      EXPECT_TRUE(seen.insert(w).second) << "theta classes overlap at " << word_string(w);
      EXPECT_FALSE(gs.count(w));
    }
  }
}

TEST(PointAction, ComposesOnSurfaceImages) {
  alg::PrimeField f(13);
  std::mt19937_64 rng(21);
  auto p = cover::draw_params(f, rng);
  auto pts = cover::image_points(f, cover::enumerate_surface(f, p));
  ASSERT_FALSE(pts.empty());
  std::set<WeightedPoint> set(pts.begin(), pts.end());
  std::uniform_int_distribution<int> w(0, 63);
  for (int k = 0; k < 1000; ++k) {
    const auto& pt = pts[static_cast<std::size_t>(rng() % pts.size())];
    auto a = static_cast<Word>(w(rng)), b = static_cast<Word>(w(rng));
    EXPECT_EQ(act(f, a, act(f, b, pt)), act(f, static_cast<Word>(a ^ b), pt));
    EXPECT_EQ(canonical_point(f, pt.c), pt);
  }
  // H preserves q up to sign, so it permutes the points of T.
  for (auto g : subgroup_h()) {
    for (const auto& pt : pts) EXPECT_TRUE(set.count(act(f, g, pt))) << word_string(g);
  }
}

TEST(Checks, TableAndRepresentationPass) {
  for (auto r : {check_generators(), check_subgroups(), check_regular_representation(), check_fixed_loci(),
                 check_degenerate_delta()}) {
    EXPECT_TRUE(r.passed()) << r.to_line();
  }
}

}  // namespace
}  // namespace upv::grouprep
