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

// Sparse multivariate polynomials with exact coefficients, and the
// substitution homomorphisms that act on them.

#ifndef UPV_EXACTALG_POLY_HPP_
#define UPV_EXACTALG_POLY_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "upv/exactalg/ambient.hpp"
#include "upv/exactalg/scalar.hpp"

namespace upv::alg {

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LaurentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <Scalar K>
class Poly {
 public:
  using Terms = std::map<Monomial, K>;

  explicit Poly(const Ambient& amb) : amb_(&amb) {}

  static Poly constant(const Ambient& amb, const K& c) { return monomial(amb, Monomial{}, c); }
  static Poly variable(const Ambient& amb, int var, const K& one) {
    return monomial(amb, unit_monomial(var), one);
  }
  static Poly monomial(const Ambient& amb, const Monomial& m, const K& c) {
    Poly p(amb);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  const Ambient& ambient() const { return *amb_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of m, or nullopt when absent.
  std::optional<K> coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_laurent() const {
    for (const auto& [m, c] : terms_) {
      if (m.has_negative()) return true;
    }
    return false;
  }

  // Weighted degree of every term, or nullopt when inhomogeneous / zero.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      int dm = amb_->weighted_degree(m);
      if (d && *d != dm) return std::nullopt;
      d = dm;
    }
    return d;
  }
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  std::optional<std::array<int, 4>> homogeneous_multidegree() const {
    std::optional<std::array<int, 4>> d;
    for (const auto& [m, c] : terms_) {
      auto dm = amb_->multidegree(m);
      if (d && *d != dm) return std::nullopt;
      d = dm;
    }
    return d;
  }

  // Terms printed from the lexicographically largest monomial down.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const auto& [m, c] = *it;
      std::string cs = c.to_string();
      bool compound = cs.find_first_of("+*", 1) != std::string::npos ||
                      (cs.size() > 1 && cs.find('-', 1) != std::string::npos);
      if (compound) cs = "(" + cs + ")";
      if (m.is_one()) {
        out += cs;
      } else if (c.is_one()) {
        out += amb_->format(m);
      } else {
        out += cs + "*" + amb_->format(m);
      }
    }
    return out;
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c = c * s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(*a.amb_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.amb_ == b.amb_ && a.terms_ == b.terms_;
  }

  Poly pow(unsigned e, const K& one) const {
    Poly r = constant(*amb_, one), b = *this;
    while (e) {
      if (e & 1u) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  Poly times_monomial(const Monomial& m) const {
    Poly r(*amb_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }

  // Exact division by a monomial; nullopt if some term is not divisible.
  std::optional<Poly> divide_monomial(const Monomial& m) const {
    Poly r(*amb_);
    for (const auto& [mm, c] : terms_) {
      if (!divides(m, mm)) return std::nullopt;
      r.terms_.emplace(mm / m, c);
    }
    return r;
  }

  // Largest monomial dividing every term (componentwise minimum).
  Monomial monomial_content() const {
    if (terms_.empty()) return Monomial{};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) g = monomial_gcd(g, m);
    return g;
  }

  // Partial derivative; Laurent exponents are handled.
  Poly derivative(int var) const {
    Poly r(*amb_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      if (e == 0) continue;
      Monomial mm = m;
      mm[var] = static_cast<std::int16_t>(e - 1);
      r.add_term(mm, c * scalar_from_int(c, e));
    }
    return r;
  }

  // Leading term under the canonical (lexicographic) order.
  std::pair<Monomial, K> leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

 private:
  void check(const Poly& o) const {
    if (amb_ != o.amb_) {
      throw AmbientMismatch("ambient mismatch: " + amb_->name() + " vs " + o.amb_->name());
    }
  }

  // Integer e as an element of the same field as c.
  static K scalar_from_int(const K& c, int e) {
    if constexpr (std::is_same_v<K, Zp>) {
      long long p = static_cast<long long>(c.modulus());
      long long r = e % p;
      if (r < 0) r += p;
      return Zp(static_cast<std::uint64_t>(r), c.modulus());
    } else {
      return K(e);
    }
  }

  const Ambient* amb_;
  Terms terms_;
};

// ---------------------------------------------------------------------------

// Sends variable v of the source ambient to coef_v * monomial_v in the target.
template <Scalar K>
class MonomialMap {
 public:
  struct Image {
    K coef;
    Monomial mono;
  };

  MonomialMap(const Ambient& source, const Ambient& target, std::vector<Image> images,
              bool laurent = false)
      : src_(&source), dst_(&target), images_(std::move(images)), laurent_(laurent) {
    if (static_cast<int>(images_.size()) != src_->size()) {
      throw std::invalid_argument("monomial map needs one image per source variable");
    }
  }

  static MonomialMap identity(const Ambient& amb, const K& one) {
    std::vector<Image> imgs;
    for (int v = 0; v < amb.size(); ++v) imgs.push_back({one, unit_monomial(v)});
    return MonomialMap(amb, amb, std::move(imgs));
  }

  const Ambient& source() const { return *src_; }
  const Ambient& target() const { return *dst_; }
  bool laurent() const { return laurent_; }
  const Image& image(int var) const { return images_.at(static_cast<std::size_t>(var)); }
  Poly<K> image_poly(int var) const {
    return Poly<K>::monomial(*dst_, image(var).mono, image(var).coef);
  }

  Poly<K> operator()(const Poly<K>& f) const {
    if (&f.ambient() != src_) {
      throw AmbientMismatch("substitution source is " + src_->name() + ", polynomial lives in " +
                            f.ambient().name());
    }
    Poly<K> out(*dst_);
    for (const auto& [m, c] : f.terms()) {
      K coef = c;
      Monomial mono;
      for (int v = 0; v < src_->size(); ++v) {
        int e = m[v];
        if (e == 0) continue;
        const Image& img = images_[static_cast<std::size_t>(v)];
        if (e > 0) {
          for (int k = 0; k < e; ++k) coef = coef * img.coef;
        } else {
          for (int k = 0; k < -e; ++k) coef = coef / img.coef;
        }
        for (int w = 0; w < dst_->size(); ++w) {
          mono[w] = static_cast<std::int16_t>(mono[w] + e * img.mono[w]);
        }
      }
      if (!laurent_ && mono.has_negative()) {
        throw LaurentError("substitution produced a negative exponent");
      }
      out.add_term(mono, coef);
    }
    return out;
  }

  // (this o inner): first apply inner, then this.  Requires
  // inner.target() == this->source().
  MonomialMap after(const MonomialMap& inner) const {
    if (inner.dst_ != src_) throw AmbientMismatch("cannot compose monomial maps");
    std::vector<Image> imgs;
    for (int v = 0; v < inner.src_->size(); ++v) {
      Poly<K> p = (*this)(inner.image_poly(v));
      if (p.size() != 1) throw std::logic_error("monomial map composition lost a term");
      auto [m, c] = p.leading_term();
      imgs.push_back({c, m});
    }
    return MonomialMap(*inner.src_, *dst_, std::move(imgs), laurent_ || inner.laurent_);
  }

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    if (a.src_ != b.src_ || a.dst_ != b.dst_) return false;
    for (std::size_t v = 0; v < a.images_.size(); ++v) {
      if (!(a.images_[v].coef == b.images_[v].coef) || a.images_[v].mono != b.images_[v].mono) {
        return false;
      }
    }
    return true;
  }

 private:
  const Ambient* src_;
  const Ambient* dst_;
  std::vector<Image> images_;
  bool laurent_;
};

template <Scalar K>
Poly<K> substitute(const Poly<K>& f, const MonomialMap<K>& m) {
  return m(f);
}

// General substitution: variable v of f's ambient goes to images[v].
// Negative exponents in f are rejected.
template <Scalar K>
Poly<K> substitute_polys(const Poly<K>& f, const std::vector<Poly<K>>& images,
                         const Ambient& target, const K& one) {
  if (static_cast<int>(images.size()) != f.ambient().size()) {
    throw std::invalid_argument("need one image per variable");
  }
  std::vector<std::vector<Poly<K>>> powers(images.size());
  auto power = [&](std::size_t v, int e) -> const Poly<K>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly<K>::constant(target, one));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(e)];
  };
  Poly<K> out(target);
  for (const auto& [m, c] : f.terms()) {
    if (m.has_negative()) throw LaurentError("cannot substitute into a Laurent polynomial");
    Poly<K> term = Poly<K>::constant(target, c);
    for (std::size_t v = 0; v < images.size(); ++v) {
      int e = m[static_cast<int>(v)];
      if (e > 0) term = term * power(v, e);
    }
    out += term;
  }
  return out;
}

// Evaluate at a point (one value per variable). Negative exponents invert.
template <Scalar K>
K evaluate(const Poly<K>& f, const std::vector<K>& point, const K& one) {
  if (static_cast<int>(point.size()) != f.ambient().size()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  K acc = one - one;
  for (const auto& [m, c] : f.terms()) {
    K t = c;
    for (std::size_t v = 0; v < point.size(); ++v) {
      int e = m[static_cast<int>(v)];
      if (e > 0) {
        for (int k = 0; k < e; ++k) t = t * point[v];
      } else if (e < 0) {
        for (int k = 0; k < -e; ++k) t = t / point[v];
      }
    }
    acc = acc + t;
  }
  return acc;
}

// If a == c * b for a nonzero scalar c, return c.
template <Scalar K>
std::optional<K> proportionality(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  auto [mb, cb] = b.leading_term();
  auto ca = a.coefficient(mb);
  if (!ca) return std::nullopt;
  K ratio = *ca / cb;
  if (a == b * ratio) return ratio;
  return std::nullopt;
}

// Image of a rational polynomial in another field (same ambient).
template <Field F>
Poly<typename F::Elem> convert(const Poly<Rational>& f, const F& field) {
  Poly<typename F::Elem> out(f.ambient());
  for (const auto& [m, c] : f.terms()) out.add_term(m, field.from_rational(c));
  return out;
}

template <Field F>
MonomialMap<typename F::Elem> convert(const MonomialMap<Rational>& m, const F& field) {
  using E = typename F::Elem;
  std::vector<typename MonomialMap<E>::Image> imgs;
  for (int v = 0; v < m.source().size(); ++v) {
    imgs.push_back({field.from_rational(m.image(v).coef), m.image(v).mono});
  }
  return MonomialMap<E>(m.source(), m.target(), std::move(imgs), m.laurent());
}

// Homogenize f with respect to the weighted grading by multiplying each term
// by a power of `var` (which must have weight 1).
template <Scalar K>
Poly<K> homogenize(const Poly<K>& f, int var) {
  const Ambient& amb = f.ambient();
  if (amb.weight(var) != 1) throw std::invalid_argument("homogenizing variable needs weight 1");
  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, amb.weighted_degree(m));
  Poly<K> out(amb);
  for (const auto& [m, c] : f.terms()) {
    out.add_term(m * unit_monomial(var, top - amb.weighted_degree(m)), c);
  }
  return out;
}

}  // namespace upv::alg

#endif  // UPV_EXACTALG_POLY_HPP_
