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


#include "upv/invariants/invariants.hpp"

#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "upv/exactalg/linalg.hpp"

namespace upv::invariants {

using alg::Ambient;
using alg::PrimeField;
using alg::Zp;

namespace {

void monomials_rec(const Ambient& amb, const std::vector<int>& vars, std::size_t k, int left, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (k == vars.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  int v = vars[k];
  int w = amb.weight(v);
  for (int e = 0; e * w <= left; ++e) {
    cur[v] = static_cast<std::int16_t>(e);
    monomials_rec(amb, vars, k + 1, left - e * w, cur, out);
  }
  cur[v] = 0;
}

std::vector<int> all_vars(const Ambient& amb) {
  std::vector<int> v;
  for (int k = 0; k < amb.size(); ++k) v.push_back(k);
  return v;
}

std::vector<Poly<Zp>> convert_all(const unproj::IdealPresentation<Rational>& ideal, const PrimeField& f) {
  std::vector<Poly<Zp>> out;
  for (const auto& g : ideal.generators) out.push_back(alg::convert(g.poly, f));
  return out;
}

HilbertProfile profile(const std::string& name, std::uint64_t p, const std::vector<Poly<Zp>>& gens,
                       const std::vector<int>& vars, int max_degree) {
  HilbertProfile out;
  out.ideal = name;
  out.prime = p;
  for (int d = 0; d <= max_degree; ++d) out.h.push_back(hilbert_value(gens, vars, d, p));
  return out;
}

unproj::FamilyParams<Zp> random_nu(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, f.p() - 1);
  unproj::FamilyParams<Zp> p;
  for (auto& v : p.nu) v = Zp(d(rng), f.p());
  return p;
}

}  // namespace

std::vector<Monomial> weighted_monomials(const Ambient& amb, const std::vector<int>& vars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  monomials_rec(amb, vars, 0, d, cur, out);
  return out;
}

std::size_t hilbert_value(const std::vector<Poly<Zp>>& gens, const std::vector<int>& vars, int d, std::uint64_t p) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const Ambient& amb = gens.front().ambient();
  auto cols = weighted_monomials(amb, vars, d);
  std::unordered_map<Monomial, std::size_t, alg::MonomialHash> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index.emplace(cols[k], k);
  alg::ModPEchelon ech(cols.size(), static_cast<std::uint32_t>(p));
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto e = g.homogeneous_degree();
    if (!e) throw std::invalid_argument("inhomogeneous generator");
    if (*e > d) continue;
    for (const auto& m : weighted_monomials(amb, vars, d - *e)) {
      std::vector<std::uint32_t> row(cols.size(), 0);
      for (const auto& [gm, c] : g.terms()) {
        auto it = index.find(gm * m);
        if (it == index.end()) throw std::invalid_argument("generator uses a variable outside the basis");
        row[it->second] = static_cast<std::uint32_t>(c.value());
      }
      ech.add_row(std::move(row));
      if (ech.rank() == cols.size()) return 0;
    }
  }
  return cols.size() - ech.rank();
}

std::string HilbertProfile::table() const {
  std::ostringstream os;
  os << std::setw(3) << "d" << std::setw(8) << "h(d)" << '\n';
  for (std::size_t d = 0; d < h.size(); ++d) os << std::setw(3) << d << std::setw(8) << h[d] << '\n';
  return os.str();
}

Json HilbertProfile::to_json() const {
  Json j;
  j["ideal"] = ideal;
  j["prime"] = prime;
  if (!nu.empty()) j["nu"] = nu;
  j["h"] = h;
  return j;
}

HilbertProfile hilbert_x(std::uint64_t p, int max_degree) {
  PrimeField f(p);
  std::vector<int> xs;
  for (int v = 0; v < 8; ++v) xs.push_back(v);
  return profile("X", p, convert_all(unproj::build_x_ideal(), f), xs, max_degree);
}

HilbertProfile hilbert_y(std::uint64_t p, int max_degree) {
  PrimeField f(p);
  return profile("Y", p, convert_all(unproj::build_unprojection_ideal(), f), all_vars(Ambient::xy()), max_degree);
}

HilbertProfile hilbert_v(std::uint64_t p, int max_degree) {
  PrimeField f(p);
  return profile("V", p, convert_all(unproj::build_v_ideal(), f), all_vars(Ambient::xy()), max_degree);
}

HilbertProfile hilbert_t(std::uint64_t p, const unproj::FamilyParams<Zp>& nu, int max_degree) {
  PrimeField f(p);
  const Ambient& xy = Ambient::xy();
  // x01 -> -x00 on every generator.
  std::vector<alg::MonomialMap<Zp>::Image> imgs;
  for (int v = 0; v < xy.size(); ++v) {
    if (v == alg::x_var(0, 1)) {
      imgs.push_back({-f.one(), alg::unit_monomial(alg::x_var(0, 0))});
    } else {
      imgs.push_back({f.one(), alg::unit_monomial(v)});
    }
  }
  alg::MonomialMap<Zp> elim(xy, xy, std::move(imgs));
  std::vector<Poly<Zp>> gens;
  for (const auto& g : unproj::build_t_ideal(f, nu).generators) gens.push_back(elim(g.poly));
  std::vector<int> vars;
  for (int v = 0; v < xy.size(); ++v) {
    if (v != alg::x_var(0, 1)) vars.push_back(v);
  }
  auto out = profile("T", p, gens, vars, max_degree);
  out.nu = nu.strings();
  return out;
}

std::int64_t plurigenus_expected(int n) {
  if (n < 2) throw std::invalid_argument("plurigenus formula needs n >= 2");
  return 8 + 12 * static_cast<std::int64_t>(n) * (n - 1);
}

std::vector<std::int64_t> complete_intersection_series(int max_degree) {
  const auto n = static_cast<std::size_t>(max_degree + 1);
  // 1 / (1 - t)^8
  std::vector<std::int64_t> a(n, 0);
  a[0] = 1;
  for (int k = 0; k < 8; ++k) {
    for (std::size_t d = 1; d < n; ++d) a[d] += a[d - 1];
  }
  // times (1 - t^2), three times
  for (int k = 0; k < 3; ++k) {
    for (std::size_t d = n; d-- > 2;) a[d] -= a[d - 2];
  }
  return a;
}

IntersectionClass IntersectionClass::unit() {
  IntersectionClass c;
  c.c_[0] = 1;
  return c;
}

IntersectionClass IntersectionClass::h(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("h_i needs i in 1..4");
  IntersectionClass c;
  c.c_[1u << (i - 1)] = 1;
  return c;
}

IntersectionClass IntersectionClass::hyperplane() { return multidegree({1, 1, 1, 1}); }

IntersectionClass IntersectionClass::multidegree(const std::array<int, 4>& d) {
  IntersectionClass c;
  for (int i = 0; i < 4; ++i) c.c_[1u << i] = d[static_cast<std::size_t>(i)];
  return c;
}

IntersectionClass operator+(const IntersectionClass& a, const IntersectionClass& b) {
  IntersectionClass r;
  for (std::size_t k = 0; k < 16; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

IntersectionClass operator*(const IntersectionClass& a, const IntersectionClass& b) {
  IntersectionClass r;
  for (unsigned x = 0; x < 16; ++x) {
    if (!a.c_[x]) continue;
    for (unsigned y = 0; y < 16; ++y) {
      if (x & y) continue;
      r.c_[x | y] += a.c_[x] * b.c_[y];
    }
  }
  return r;
}

IntersectionClass operator*(std::int64_t k, const IntersectionClass& a) {
  IntersectionClass r;
  for (std::size_t m = 0; m < 16; ++m) r.c_[m] = k * a.c_[m];
  return r;
}

std::int64_t intersection_number(const std::vector<IntersectionClass>& classes) {
  IntersectionClass prod = IntersectionClass::unit();
  for (const auto& c : classes) prod = prod * c;
  for (unsigned m = 0; m < 15; ++m) {
    if (prod.coefficient(m) != 0) throw std::invalid_argument("product is not of top degree");
  }
  return prod.coefficient(15);
}

// ---------------------------------------------------------------------------

CheckReport check_hilbert_t(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int max_degree) {
  Stopwatch sw;
  CheckReport r;
  r.id = "invariants.hilbert_T";
  std::mt19937_64 rng(seed);
  Json profiles = Json::array();
  std::vector<std::size_t> first;
  for (auto p : primes) {
    PrimeField f(p);
    for (int k = 0; k < 3; ++k) {
      auto prof = hilbert_t(p, random_nu(f, rng), max_degree);
      profiles.push_back(prof.to_json());
      if (first.empty()) first = prof.h;
      if (prof.h != first) r.status = Status::kUnstable;
      r.expect(prof.h[0] == 1, "h_T(0) != 1");
      if (max_degree >= 1) r.expect(prof.h[1] == 7, "h_T(1) != 7");
      for (int n = 2; n <= max_degree; ++n) {
        r.expect(static_cast<std::int64_t>(prof.h[static_cast<std::size_t>(n)]) == plurigenus_expected(n),
                 "h_T(" + std::to_string(n) + ") != " + std::to_string(plurigenus_expected(n)) + " over F" +
                     std::to_string(p));
      }
    }
  }
  if (r.status == Status::kUnstable) r.fail("h_T differs across primes or nu");
  r.params["primes"] = primes;
  r.params["seed"] = seed;
  r.params["max_degree"] = max_degree;
  r.witness["profiles"] = profiles;
  sw.stamp(r);
  return r;
}

CheckReport check_hilbert_x(const std::vector<std::uint64_t>& primes, int max_degree) {
  Stopwatch sw;
  CheckReport r;
  r.id = "invariants.hilbert_X";
  auto series = complete_intersection_series(max_degree);
  Json profiles = Json::array();
  for (auto p : primes) {
    auto prof = hilbert_x(p, max_degree);
    profiles.push_back(prof.to_json());
    for (int d = 0; d <= max_degree; ++d) {
      r.expect(static_cast<std::int64_t>(prof.h[static_cast<std::size_t>(d)]) == series[static_cast<std::size_t>(d)],
               "h_X(" + std::to_string(d) + ") differs from the complete-intersection series");
    }
  }
  r.params["primes"] = primes;
  r.witness["series"] = series;
  r.witness["profiles"] = profiles;
  sw.stamp(r);
  return r;
}

CheckReport check_hilbert_y(const std::vector<std::uint64_t>& primes, int max_degree) {
  Stopwatch sw;
  CheckReport r;
  r.id = "invariants.hilbert_Y";
  Json profiles = Json::array();
  std::vector<std::size_t> first;
  for (auto p : primes) {
    auto prof = hilbert_y(p, max_degree);
    profiles.push_back(prof.to_json());
    if (first.empty()) first = prof.h;
    r.expect(prof.h == first, "h_Y differs across primes");
    r.expect(prof.h[0] == 1, "h_Y(0) != 1");
    if (max_degree >= 1) r.expect(prof.h[1] == 8, "h_Y(1) != 8");
  }
  r.params["primes"] = primes;
  r.witness["profiles"] = profiles;
  sw.stamp(r);
  return r;
}

CheckReport check_hilbert_v(const std::vector<std::uint64_t>& primes, int max_degree) {
  Stopwatch sw;
  CheckReport r;
  r.id = "invariants.hilbert_V";
  Json profiles = Json::array();
  for (auto p : primes) {
    auto v = hilbert_v(p, max_degree);
    auto y = hilbert_y(p, max_degree);
    profiles.push_back(v.to_json());
    r.expect(v.h[0] == 1, "h_V(0) != 1");
    if (max_degree >= 1) r.expect(v.h[1] == 7, "h_V(1) != 7");
    // x00 + x01 is a non-zero-divisor on the Cohen-Macaulay ring of Y.
    for (int d = 1; d <= max_degree; ++d) {
      auto k = static_cast<std::size_t>(d);
      r.expect(v.h[k] == y.h[k] - y.h[k - 1], "h_V(d) != h_Y(d) - h_Y(d-1) at d = " + std::to_string(d));
    }
  }
  r.params["primes"] = primes;
  r.witness["profiles"] = profiles;
  sw.stamp(r);
  return r;
}

CheckReport check_intersection() {
  Stopwatch sw;
  CheckReport r;
  r.id = "invariants.intersection";
  auto H = IntersectionClass::hyperplane();
  auto h4 = intersection_number({H, H, H, H});
  auto kv = intersection_number({H, H, H, H});  // H^3 . [Z1], [Z1] = H
  auto k2 = intersection_number({H, H, H, 2 * H});
  r.expect(h4 == 24, "(h1+h2+h3+h4)^4 != 24");
  r.expect(h4 / 2 == 12, "deg Y != 12");
  r.expect(kv / 2 == 12, "-K_V^3 != 12");
  r.expect(k2 / 2 == 24, "K_T^2 != 24");
  r.expect(intersection_number({IntersectionClass::h(1), IntersectionClass::h(2), IntersectionClass::h(3),
                                IntersectionClass::h(4)}) == 1,
           "h1 h2 h3 h4 != 1");
  r.expect(IntersectionClass::h(1) * IntersectionClass::h(1) == IntersectionClass(), "h1^2 != 0");
  r.witness["H^4"] = h4;
  r.witness["deg_Y"] = h4 / 2;
  r.witness["H^3.Z1"] = kv;
  r.witness["minus_K_V_cubed"] = kv / 2;
  r.witness["H^2.Z1.Z2"] = k2;
  r.witness["K_T_squared"] = k2 / 2;
  sw.stamp(r);
  return r;
}

}  // namespace upv::invariants
