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

// Dense linear algebra over exact fields, a streaming rank over Z/p with
// machine-word residues, and the determinant of a polynomial matrix.

#ifndef UPV_EXACTALG_LINALG_HPP_
#define UPV_EXACTALG_LINALG_HPP_

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "upv/exactalg/poly.hpp"
#include "upv/exactalg/scalar.hpp"

namespace upv::alg {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Rank by Gaussian elimination. The input is copied.
template <Scalar K>
std::size_t rank(Matrix<K> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (const auto& r : m) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    K inv = K(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      K f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Zp has no integer constructor, so it gets its own overload.
std::size_t rank(Matrix<Zp> m);

// Incremental row echelon basis over Z/p for p < 2^31. Rows are dense
// vectors of residues; add_row() reduces against the stored pivots and keeps
// the remainder if it is nonzero.
class ModPEchelon {
 public:
  ModPEchelon(std::size_t cols, std::uint32_t p);

  // Returns true if the row increased the rank.
  bool add_row(std::vector<std::uint32_t> row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::uint32_t p_;
  // pivot column -> normalized row (leading entry 1)
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::int64_t> pivot_of_col_;
  std::vector<std::size_t> pivots_;
};

// Determinant of a square polynomial matrix by Laplace expansion along rows,
// memoized over the set of columns already used.
template <Scalar K>
Poly<K> determinant(const Matrix<Poly<K>>& m, const K& one) {
  const std::size_t n = m.size();
  for (const auto& r : m) {
    if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (n > 24) throw std::invalid_argument("matrix too large for subset expansion");
  const Ambient& amb = m[0][0].ambient();
  // minors[mask] = det of rows [n - popcount(mask), n) restricted to columns in mask.
  std::unordered_map<std::uint32_t, Poly<K>> layer, next;
  layer.emplace(0u, Poly<K>::constant(amb, one));
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t row = n - 1 - step;
    next.clear();
    for (const auto& [mask, minor] : layer) {
      if (minor.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (mask & (1u << c)) continue;
        const Poly<K>& entry = m[row][c];
        if (entry.is_zero()) continue;
        // Sign from the position of c within mask | c.
        int below = __builtin_popcount(mask & ((1u << c) - 1u));
        Poly<K> term = entry * minor;
        if (below % 2) term = -term;
        std::uint32_t nm = mask | (1u << c);
        auto it = next.find(nm);
        if (it == next.end()) {
          next.emplace(nm, std::move(term));
        } else {
          it->second += term;
        }
      }
    }
    std::swap(layer, next);
  }
  auto it = layer.find((1u << n) - 1u);
  return it == layer.end() ? Poly<K>(amb) : it->second;
}

}  // namespace upv::alg

#endif  // UPV_EXACTALG_LINALG_HPP_
