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

#include "upv/exactalg/linalg.hpp"

namespace upv::alg {

std::size_t rank(Matrix<Zp> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Zp inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      Zp f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

ModPEchelon::ModPEchelon(std::size_t cols, std::uint32_t p)
    : cols_(cols), p_(p), pivot_of_col_(cols, -1) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("modulus out of range");
}

bool ModPEchelon::add_row(std::vector<std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c] == 0) continue;
    std::int64_t k = pivot_of_col_[c];
    if (k < 0) {
      std::uint32_t inv = inv_mod(row[c], p_);
      for (std::size_t j = c; j < cols_; ++j) {
        row[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(row[j]) * inv % p_);
      }
      pivot_of_col_[c] = static_cast<std::int64_t>(rows_.size());
      rows_.push_back(std::move(row));
      pivots_.push_back(c);
      return true;
    }
    const auto& piv = rows_[static_cast<std::size_t>(k)];
    std::uint64_t f = p_ - row[c];
    for (std::size_t j = c; j < cols_; ++j) {
      if (piv[j]) row[j] = static_cast<std::uint32_t>((row[j] + f * piv[j]) % p_);
    }
  }
  return false;
}

}  // namespace upv::alg
