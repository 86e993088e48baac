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


// Small reference implementations used as test oracles. They are written for
// clarity and share no code with the library routines they check.

#ifndef UPV_TESTS_ORACLES_HPP_
#define UPV_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "upv/exactalg/poly.hpp"
#include "upv/exactalg/scalar.hpp"

namespace upv::oracle {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

// Rank over Z/p by elimination on raw residues.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = powmod(m[r][c], p - 2, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      std::uint64_t f = mulmod(m[i][c], inv, p);
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] + p - mulmod(f, m[r][k], p)) % p;
    }
    ++r;
  }
  return r;
}

// Determinant over Z/p by elimination on raw residues.
inline std::uint64_t det_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] % p == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = (p - det) % p;
    }
    det = mulmod(det, m[c][c], p);
    std::uint64_t inv = powmod(m[c][c], p - 2, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      std::uint64_t f = mulmod(m[i][c], inv, p);
      for (std::size_t k = c; k < n; ++k) m[i][k] = (m[i][k] + p - mulmod(f, m[c][k], p)) % p;
    }
  }
  return det;
}

// Evaluates a polynomial with rational coefficients at a point of F_p^n,
// term by term with raw residues.
inline std::uint64_t eval_mod_p(const alg::Poly<alg::Rational>& f, const std::vector<std::uint64_t>& pt,
                                std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_class num = c.numerator() % static_cast<unsigned long>(p);
    if (num < 0) num += static_cast<unsigned long>(p);
    mpz_class den = c.denominator() % static_cast<unsigned long>(p);
    std::uint64_t t = mulmod(num.get_ui(), powmod(den.get_ui(), p - 2, p), p);
    for (std::size_t v = 0; v < pt.size(); ++v) {
      t = mulmod(t, powmod(pt[v], static_cast<std::uint64_t>(m[static_cast<int>(v)]), p), p);
    }
    acc = (acc + t) % p;
  }
  return acc;
}

// Coefficients of prod (1 - t^{d_k}) / (1 - t)^n up to t^max.
inline std::vector<std::int64_t> ci_series(const std::vector<int>& degrees, int n, int max) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(max) + 1, 0);
  s[0] = 1;
  for (int d : degrees) {
    for (int k = max; k >= d; --k) s[static_cast<std::size_t>(k)] -= s[static_cast<std::size_t>(k - d)];
  }
  for (int r = 0; r < n; ++r) {
    for (int k = 1; k <= max; ++k) s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - 1)];
  }
  return s;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace upv::oracle

#endif  // UPV_TESTS_ORACLES_HPP_
