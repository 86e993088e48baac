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
#include <string>
#include <vector>

#include "oracles.hpp"
#include "upv/exactalg/ambient.hpp"
#include "upv/exactalg/linalg.hpp"
#include "upv/exactalg/poly.hpp"
#include "upv/exactalg/scalar.hpp"

namespace upv::alg {
namespace {

const Ambient& abc() {
  static const Ambient amb("ABC", {"a", "b", "c"}, {1, 1, 1});
  return amb;
}

Poly<Rational> random_poly(std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-9, 9);
  Poly<Rational> f(abc());
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int v = 0; v < 3; ++v) m[v] = static_cast<std::int16_t>(e(rng));
    f.add_term(m, Rational(c(rng)));
  }
  return f;
}

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-4/8"), Rational(-1, 2));
  EXPECT_THROW(Rational::parse("4/-8"), std::exception);
  EXPECT_EQ(Rational::parse("0/5"), Rational(0));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("x"), std::exception);
}

TEST(Rational, StringRoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> d(-100000, 100000);
  for (int k = 0; k < 1000; ++k) {
    long long n = d(rng), m = d(rng);
    if (m == 0) continue;
    Rational r(n, m);
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}

TEST(Rational, ArithmeticMatchesCrossMultiplication) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long long> d(1, 1000);
  for (int k = 0; k < 1000; ++k) {
    long long a = d(rng) - 500, b = d(rng), c = d(rng) - 500, e = d(rng);
    Rational sum = Rational(a, b) + Rational(c, e);
    EXPECT_EQ(sum, Rational(a * e + c * b, b * e));
    Rational prod = Rational(a, b) * Rational(c, e);
    EXPECT_EQ(prod, Rational(a * c, b * e));
  }
}

TEST(GaussRational, UnitSquaresToMinusOne) {
  auto i = GaussRational::i();
  EXPECT_EQ(i * i, GaussRational(-1));
  GaussRational z = GaussRational::parse("3+4*i");
  EXPECT_EQ(z * z.inverse(), GaussRational(1));
}

TEST(Zp, MatchesMachineArithmetic) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {13ull, 17ull, 29ull, 2147483629ull}) {
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int k = 0; k < 1000; ++k) {
      std::uint64_t a = d(rng), b = d(rng);
      EXPECT_EQ((Zp(a, p) * Zp(b, p)).value(), oracle::mulmod(a, b, p));
      EXPECT_EQ((Zp(a, p) + Zp(b, p)).value(), (a + b) % p);
      EXPECT_EQ((Zp(a, p) - Zp(b, p)).value(), (a + p - b) % p);
      if (b) EXPECT_EQ((Zp(a, p) / Zp(b, p) * Zp(b, p)).value(), a);
    }
  }
}

TEST(PrimeField, DistinguishedRootOfMinusOne) {
  for (std::uint64_t p : {5ull, 13ull, 17ull, 29ull, 41ull}) {
    PrimeField f(p);
    auto i = f.i();
    EXPECT_EQ(i * i, -f.one());
    EXPECT_LE(i.value(), p - i.value());
  }
  EXPECT_THROW(PrimeField(7), std::exception);
  EXPECT_THROW(PrimeField(15), std::exception);
}

TEST(Linalg, RankAgreesWithOracle) {
  std::mt19937_64 rng(4);
  const std::uint64_t p = 13;
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  std::uniform_int_distribution<int> sz(1, 7);
  for (int k = 0; k < 300; ++k) {
    int rows = sz(rng), cols = sz(rng), inner = sz(rng);
    // Product of rows x inner and inner x cols forces low rank often.
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(inner)),
        b(inner, std::vector<std::uint64_t>(cols)), m(rows, std::vector<std::uint64_t>(cols, 0));
    for (auto& r : a)
      for (auto& v : r) v = d(rng);
    for (auto& r : b)
      for (auto& v : r) v = d(rng);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        for (int l = 0; l < inner; ++l) m[i][j] = (m[i][j] + a[i][l] * b[l][j]) % p;
    Matrix<Zp> mz;
    ModPEchelon ech(static_cast<std::size_t>(cols), static_cast<std::uint32_t>(p));
    for (const auto& r : m) {
      std::vector<Zp> row;
      std::vector<std::uint32_t> raw;
      for (auto v : r) {
        row.emplace_back(v, p);
        raw.push_back(static_cast<std::uint32_t>(v));
      }
      mz.push_back(row);
      ech.add_row(raw);
    }
    auto expected = oracle::rank_mod_p(m, p);
    EXPECT_EQ(rank(mz), expected);
    EXPECT_EQ(ech.rank(), expected);
  }
}

TEST(Linalg, RationalRankOfKnownMatrices) {
  Matrix<Rational> m = {{Rational(1), Rational(2), Rational(3)},
                        {Rational(2), Rational(4), Rational(6)},
                        {Rational(1, 2), Rational(0), Rational(-1)}};
  EXPECT_EQ(rank(m), 2u);
  EXPECT_THROW(rank(Matrix<Rational>{{Rational(1)}, {Rational(1), Rational(2)}}), std::invalid_argument);
}

// Leibniz expansion over all permutations.
Poly<Rational> leibniz(const Matrix<Poly<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Poly<Rational> out(abc());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Poly<Rational> t = Poly<Rational>::constant(abc(), Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i) t = t * m[i][perm[i]];
    out += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TEST(Linalg, PolynomialDeterminantMatchesLeibniz) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 4; ++k) {
      Matrix<Poly<Rational>> m(n, std::vector<Poly<Rational>>(n, Poly<Rational>(abc())));
      for (auto& r : m)
        for (auto& e : r) e = random_poly(rng, 2, 2);
      EXPECT_EQ(determinant(m, Rational(1)), leibniz(m)) << "n = " << n;
    }
  }
}

TEST(Poly, ProductEvaluatesPointwise) {
  // Schwartz-Zippel style identity test on random points.
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, 5, 3), g = random_poly(rng, 5, 3);
    std::vector<Rational> pt{Rational(static_cast<long long>(rng() % 50) - 25),
                             Rational(static_cast<long long>(rng() % 50) - 25), Rational(3, 7)};
    EXPECT_EQ(evaluate(f * g, pt, Rational(1)), evaluate(f, pt, Rational(1)) * evaluate(g, pt, Rational(1)));
    EXPECT_EQ(evaluate(f + g, pt, Rational(1)), evaluate(f, pt, Rational(1)) + evaluate(g, pt, Rational(1)));
  }
}

TEST(Poly, DerivativeObeysLeibnizRule) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(rng, 4, 3), g = random_poly(rng, 4, 3);
    for (int v = 0; v < 3; ++v) {
      EXPECT_EQ((f * g).derivative(v), f.derivative(v) * g + f * g.derivative(v));
    }
  }
}

TEST(Poly, MonomialMapCommutesWithEvaluation) {
  std::mt19937_64 rng(8);
  std::vector<MonomialMap<Rational>::Image> imgs;
  Monomial m0, m1, m2;
  m0[1] = 2;
  m1[0] = 1;
  m1[2] = 1;
  m2[2] = 1;
  imgs.push_back({Rational(-1), m0});
  imgs.push_back({Rational(3), m1});
  imgs.push_back({Rational(1, 2), m2});
  MonomialMap<Rational> phi(abc(), abc(), imgs);
  for (int k = 0; k < 50; ++k) {
    auto f = random_poly(rng, 6, 3);
    std::vector<Rational> pt{Rational(2), Rational(-3), Rational(5, 4)};
    std::vector<Rational> img{Rational(-1) * pt[1] * pt[1], Rational(3) * pt[0] * pt[2], Rational(1, 2) * pt[2]};
    EXPECT_EQ(evaluate(phi(f), pt, Rational(1)), evaluate(f, img, Rational(1)));
  }
}

TEST(Ambient, EvenIndexTuples) {
  const auto& L = ell();
  EXPECT_EQ(L.size(), 8u);
  for (const auto& t : L) {
    EXPECT_TRUE(is_even(t));
    EXPECT_TRUE(is_even(complement(t)));
  }
  EXPECT_THROW(ell_position({1, 0, 0, 0}), std::invalid_argument);
  EXPECT_EQ(Ambient::xy().size(), 16);
  EXPECT_EQ(Ambient::xy().var_name(y_var({1, 1, 1, 1})), "y1111");
}

}  // namespace
}  // namespace upv::alg
