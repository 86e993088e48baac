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


// Automorphisms of (P^1)^4 built from a factor permutation and four 2x2
// matrices, and finite groups generated by them.

#ifndef UPV_COVER_PROJAUT_HPP_
#define UPV_COVER_PROJAUT_HPP_

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "upv/exactalg/poly.hpp"

namespace upv::cover {

using alg::Poly;

template <alg::Scalar K>
using P1Point = std::array<K, 2>;
template <alg::Scalar K>
using P1x4Point = std::array<P1Point<K>, 4>;

// g is stored through its pullback on coordinates:
//   g^#(t_ia) = sum_b m[i][a][b] * t_{perm[i], b}.
template <alg::Scalar K>
class ProjAut {
 public:
  using Mat = std::array<std::array<K, 2>, 2>;

  ProjAut(std::array<int, 4> perm, std::array<Mat, 4> mats) : perm_(perm), m_(std::move(mats)) {
    std::array<bool, 4> seen{};
    for (int p : perm_) {
      if (p < 0 || p > 3 || seen[static_cast<std::size_t>(p)]) {
        throw std::invalid_argument("factor permutation is not a bijection");
      }
      seen[static_cast<std::size_t>(p)] = true;
    }
    for (const auto& a : m_) {
      if ((a[0][0] * a[1][1] - a[0][1] * a[1][0]).is_zero()) {
        throw std::invalid_argument("singular factor matrix");
      }
    }
    normalize();
  }

  static ProjAut identity(const K& one) {
    K zero = one - one;
    Mat id{{{one, zero}, {zero, one}}};
    return ProjAut({0, 1, 2, 3}, {id, id, id, id});
  }

  // Diagonal automorphism t_ia -> d[2i+a] t_ia.
  static ProjAut diagonal(const std::array<K, 8>& d) {
    std::array<Mat, 4> ms;
    for (std::size_t i = 0; i < 4; ++i) {
      K zero = d[2 * i] - d[2 * i];
      ms[i] = Mat{{{d[2 * i], zero}, {zero, d[2 * i + 1]}}};
    }
    return ProjAut({0, 1, 2, 3}, ms);
  }

  // t_v -> coef[v] * t_{target[v]}; both variables of a factor must land in
  // one factor.
  static ProjAut from_substitution(const std::array<int, 8>& target, const std::array<K, 8>& coef) {
    std::array<int, 4> perm{};
    std::array<Mat, 4> ms;
    for (std::size_t i = 0; i < 4; ++i) {
      int f0 = target[2 * i] / 2, f1 = target[2 * i + 1] / 2;
      if (f0 != f1) throw std::invalid_argument("substitution mixes factors");
      perm[i] = f0;
      K zero = coef[2 * i] - coef[2 * i];
      ms[i] = Mat{{{zero, zero}, {zero, zero}}};
      ms[i][0][static_cast<std::size_t>(target[2 * i] % 2)] = coef[2 * i];
      ms[i][1][static_cast<std::size_t>(target[2 * i + 1] % 2)] = coef[2 * i + 1];
    }
    return ProjAut(perm, ms);
  }

  const std::array<int, 4>& perm() const { return perm_; }
  const Mat& matrix(int i) const { return m_[static_cast<std::size_t>(i)]; }

  // (this o h), whose pullback is h^# o this^#.
  ProjAut compose(const ProjAut& h) const {
    std::array<int, 4> perm{};
    std::array<Mat, 4> ms;
    for (std::size_t i = 0; i < 4; ++i) {
      std::size_t j = static_cast<std::size_t>(perm_[i]);
      perm[i] = h.perm_[j];
      const Mat& a = m_[i];
      const Mat& b = h.m_[j];
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) ms[i][r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
      }
    }
    return ProjAut(perm, ms);
  }
  friend ProjAut operator*(const ProjAut& g, const ProjAut& h) { return g.compose(h); }

  ProjAut inverse() const {
    // For a finite-order element this is a power, but compute directly.
    std::array<int, 4> perm{};
    std::array<Mat, 4> ms;
    for (std::size_t i = 0; i < 4; ++i) {
      std::size_t j = static_cast<std::size_t>(perm_[i]);
      perm[j] = static_cast<int>(i);
      const Mat& a = m_[i];
      K det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
      ms[j] = Mat{{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
    }
    return ProjAut(perm, ms);
  }

  // Image of a point: t_ia(g(P)) = g^#(t_ia)(P).
  P1x4Point<K> apply(const P1x4Point<K>& p) const {
    P1x4Point<K> out;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& src = p[static_cast<std::size_t>(perm_[i])];
      for (std::size_t a = 0; a < 2; ++a) out[i][a] = m_[i][a][0] * src[0] + m_[i][a][1] * src[1];
    }
    return out;
  }

  // Pullback of a polynomial in the T4 ambient.
  Poly<K> pullback(const Poly<K>& f, const K& one) const {
    const auto& t4 = alg::Ambient::t4();
    std::vector<Poly<K>> imgs;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t a = 0; a < 2; ++a) {
        Poly<K> img(t4);
        for (std::size_t b = 0; b < 2; ++b) {
          img.add_term(alg::unit_monomial(alg::t_var(perm_[i], static_cast<int>(b))), m_[i][a][b]);
        }
        imgs.push_back(img);
      }
    }
    return alg::substitute_polys(f, imgs, t4, one);
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) out += "; ";
      out += std::to_string(i) + "->" + std::to_string(perm_[i]) + " ";
      out += "(" + m_[i][0][0].to_string() + "," + m_[i][0][1].to_string() + "," +
             m_[i][1][0].to_string() + "," + m_[i][1][1].to_string() + ")";
    }
    return out + "]";
  }

  friend bool operator==(const ProjAut& a, const ProjAut& b) {
    return a.perm_ == b.perm_ && a.m_ == b.m_;
  }

 private:
  // Scale each factor matrix so its first nonzero entry (row-major) is 1.
  void normalize() {
    for (auto& a : m_) {
      K lead = a[0][0];
      if (lead.is_zero()) lead = a[0][1];
      if (lead.is_zero()) lead = a[1][0];
      for (auto& row : a) {
        for (auto& e : row) e = e / lead;
      }
    }
  }

  std::array<int, 4> perm_;
  std::array<Mat, 4> m_;
};

// Projective equality of two points of (P^1)^4.
template <alg::Scalar K>
bool same_point(const P1x4Point<K>& a, const P1x4Point<K>& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(a[i][0] * b[i][1] - a[i][1] * b[i][0]).is_zero()) return false;
  }
  return true;
}

// Closure of a generating set with its Cayley table (row g, column h holds
// the index of g o h).
template <alg::Scalar K>
class FiniteProjGroup {
 public:
  FiniteProjGroup(const std::vector<ProjAut<K>>& gens, const K& one, std::size_t limit = 4096) {
    elems_.push_back(ProjAut<K>::identity(one));
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      for (const auto& g : gens) {
        ProjAut<K> h = elems_[k].compose(g);
        if (index_of(h) < 0) {
          if (elems_.size() >= limit) throw std::length_error("group closure exceeded limit");
          elems_.push_back(h);
        }
      }
    }
    const std::size_t n = elems_.size();
    table_.assign(n, std::vector<int>(n, -1));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        int c = index_of(elems_[a].compose(elems_[b]));
        if (c < 0) throw std::logic_error("closure is not closed");
        table_[a][b] = c;
      }
    }
  }

  std::size_t size() const { return elems_.size(); }
  const ProjAut<K>& element(std::size_t k) const { return elems_.at(k); }
  const std::vector<ProjAut<K>>& elements() const { return elems_; }
  int product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::vector<int>>& cayley() const { return table_; }

  int index_of(const ProjAut<K>& g) const {
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      if (elems_[k] == g) return static_cast<int>(k);
    }
    return -1;
  }

  int order(std::size_t a) const {
    int ord = 1;
    std::size_t cur = a;
    while (cur != 0) {
      cur = static_cast<std::size_t>(table_[cur][a]);
      ++ord;
    }
    return ord;
  }

  // order -> number of elements of that order.
  std::map<int, int> order_histogram() const {
    std::map<int, int> h;
    for (std::size_t a = 0; a < size(); ++a) ++h[order(a)];
    return h;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (table_[a][b] != table_[b][a]) return false;
      }
    }
    return true;
  }

 private:
  std::vector<ProjAut<K>> elems_;
  std::vector<std::vector<int>> table_;
};

}  // namespace upv::cover

#endif  // UPV_COVER_PROJAUT_HPP_
