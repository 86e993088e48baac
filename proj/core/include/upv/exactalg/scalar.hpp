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

// Exact coefficient fields.
//
// Three element types are provided, each paired with a small "field"
// descriptor that knows how to produce constants:
//
//   Rational       / RationalField   -- Q, arbitrary precision (GMP)
//   GaussRational  / GaussianField   -- Q(i)
//   Zp             / PrimeField      -- F_p with p = 1 mod 4
//
// Elements are plain values; a Zp carries its modulus so that arithmetic
// needs no global context. Division by zero throws DivisionByZero.

#ifndef UPV_EXACTALG_SCALAR_HPP_
#define UPV_EXACTALG_SCALAR_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace upv::alg {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Rational

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit
  Rational(long long n, long long d);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Rational inverse() const;
  std::optional<Rational> sqrt() const;  // exact square root if it exists

  // "a/b", or "a" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

// ---------------------------------------------------------------------------
// Gaussian rationals a + b*i

class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long long n) : re_(n) {}  // NOLINT: implicit
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational parse(std::string_view text);
  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  GaussRational inverse() const;

  // "a/b+c/d*i"; a purely real value prints as "a/b".
  std::string to_string() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

// ---------------------------------------------------------------------------
// Residues modulo a prime

class Zp {
 public:
  Zp() = default;
  Zp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Zp pow(std::uint64_t e) const;
  Zp inverse() const;
  std::string to_string() const { return std::to_string(v_); }

  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend Zp operator-(const Zp& a) { return Zp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  void check_same(const Zp& o) const;

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// ---------------------------------------------------------------------------
// Field descriptors

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long long n) const { return Rational(n); }
  Elem from_rational(const Rational& r) const { return r; }
  Elem parse(std::string_view s) const { return Rational::parse(s); }
  bool has_i() const { return false; }
  std::string name() const { return "QQ"; }
};

struct GaussianField {
  using Elem = GaussRational;
  Elem zero() const { return GaussRational(0); }
  Elem one() const { return GaussRational(1); }
  Elem from_int(long long n) const { return GaussRational(n); }
  Elem from_rational(const Rational& r) const { return {r, Rational(0)}; }
  Elem parse(std::string_view s) const { return GaussRational::parse(s); }
  bool has_i() const { return true; }
  Elem i() const { return GaussRational::i(); }
  std::string name() const { return "QQ(i)"; }
};

bool is_prime(std::uint64_t n);

// F_p for a prime p = 1 (mod 4). The distinguished square root of -1 is the
// smaller of the two roots {r, p - r}.
class PrimeField {
 public:
  using Elem = Zp;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  Elem zero() const { return Zp(0, p_); }
  Elem one() const { return Zp(1, p_); }
  Elem from_int(long long n) const;
  Elem from_rational(const Rational& r) const;
  // Decimal integer, reduced mod p.
  Elem parse(std::string_view s) const;
  bool has_i() const { return true; }
  Elem i() const { return Zp(eps_, p_); }
  std::string name() const { return "F" + std::to_string(p_); }

  bool is_square(const Elem& a) const;
  std::optional<Elem> sqrt(const Elem& a) const;
  // Smallest quadratic non-residue.
  Elem nonresidue() const;

 private:
  std::uint64_t p_;
  std::uint64_t eps_;
};

template <class F>
concept Field = requires(const F& f, long long n, const Rational& r) {
  typename F::Elem;
  { f.zero() } -> std::same_as<typename F::Elem>;
  { f.one() } -> std::same_as<typename F::Elem>;
  { f.from_int(n) } -> std::same_as<typename F::Elem>;
  { f.from_rational(r) } -> std::same_as<typename F::Elem>;
  { f.name() } -> std::convertible_to<std::string>;
};

template <class K>
concept Scalar = requires(const K& a, const K& b) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

template <class K>
K scalar_pow(K base, unsigned e, K one) {
  K r = std::move(one);
  while (e) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace upv::alg

#endif  // UPV_EXACTALG_SCALAR_HPP_
