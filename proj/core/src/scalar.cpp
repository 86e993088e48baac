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

#include "upv/exactalg/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace upv::alg {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string t(s);
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DivisionByZero();
  q_ = mpq_class(static_cast<long>(n), static_cast<unsigned long>(d < 0 ? -d : d));
  if (d < 0) q_ = -q_;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(mpq_class(parse_integer(s)));
  mpz_class num = parse_integer(std::string_view(s).substr(0, slash));
  std::string_view den_text = std::string_view(s).substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') throw ParseError("negative denominator: " + s);
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw DivisionByZero();
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = q_.get_num(), d = q_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

// ---------------------------------------------------------------------------
// GaussRational

GaussRational GaussRational::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return {Rational::parse(s), Rational(0)};

  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  im_text.pop_back();  // trailing 'i'
  if (!im_text.empty() && im_text.back() == '*') im_text.pop_back();
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  if (!im_text.empty() && im_text[0] == '+') im_text.erase(0, 1);
  return {Rational::parse(re_text), Rational::parse(im_text)};
}

GaussRational GaussRational::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (norm.is_zero()) throw DivisionByZero();
  return {re_ / norm, -im_ / norm};
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im = im_.to_string() + "*i";
  if (re_.is_zero()) return im;
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + im;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

// ---------------------------------------------------------------------------
// Zp

void Zp::check_same(const Zp& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixing residues of different moduli");
}

Zp& Zp::operator+=(const Zp& o) {
  check_same(o);
  v_ += o.v_;
  if (v_ >= p_) v_ -= p_;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  check_same(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  check_same(o);
  v_ = mulmod(v_, o.v_, p_);
  return *this;
}

Zp Zp::pow(std::uint64_t e) const {
  std::uint64_t r = 1 % p_, b = v_;
  while (e) {
    if (e & 1u) r = mulmod(r, b, p_);
    b = mulmod(b, b, p_);
    e >>= 1;
  }
  return Zp(r, p_);
}

Zp Zp::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return pow(p_ - 2);
}

// ---------------------------------------------------------------------------
// PrimeField

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), eps_(0) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p % 4 != 1) {
    throw std::invalid_argument("prime " + std::to_string(p) +
                                " is not 1 mod 4, so F_p has no square root of -1");
  }
  // (g^((p-1)/4))^2 = -1 for any non-residue g.
  Zp root = nonresidue().pow((p - 1) / 4);
  eps_ = std::min(root.value(), p - root.value());
}

Zp PrimeField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Zp(static_cast<std::uint64_t>(r), p_);
}

Zp PrimeField::from_rational(const Rational& r) const {
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = r.numerator() % pz;
  mpz_class den = r.denominator() % pz;
  if (num < 0) num += pz;
  if (den == 0) throw DivisionByZero();
  return Zp(num.get_ui(), p_) / Zp(den.get_ui(), p_);
}

Zp PrimeField::parse(std::string_view s) const {
  std::string t = strip_spaces(s);
  mpz_class n = parse_integer(t);
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class r = n % pz;
  if (r < 0) r += pz;
  return Zp(r.get_ui(), p_);
}

bool PrimeField::is_square(const Zp& a) const {
  return a.is_zero() || a.pow((p_ - 1) / 2).is_one();
}

std::optional<Zp> PrimeField::sqrt(const Zp& a) const {
  if (a.is_zero()) return a;
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t q = p_ - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Zp z = nonresidue();
  Zp c = z.pow(q), t = a.pow(q), r = a.pow((q + 1) / 2);
  std::uint64_t m = s;
  while (!t.is_one()) {
    std::uint64_t i = 0;
    Zp tt = t;
    while (!tt.is_one()) {
      tt = tt * tt;
      ++i;
    }
    Zp b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  std::uint64_t v = std::min(r.value(), p_ - r.value());
  return Zp(v, p_);
}

Zp PrimeField::nonresidue() const {
  for (std::uint64_t g = 2; g < p_; ++g) {
    if (!Zp(g, p_).pow((p_ - 1) / 2).is_one()) return Zp(g, p_);
  }
  throw std::logic_error("no quadratic non-residue");
}

}  // namespace upv::alg
