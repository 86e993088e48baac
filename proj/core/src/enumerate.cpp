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


#include "upv/cover/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "upv/cover/cover.hpp"
#include "upv/exactalg/linalg.hpp"

namespace upv::cover {

using alg::Ambient;
using alg::Index4;
using grouprep::WeightedPoint;

namespace {

std::vector<P1Point<Zp>> projective_line(const PrimeField& f) {
  std::vector<P1Point<Zp>> line;
  for (std::uint64_t a = 0; a < f.p(); ++a) line.push_back({f.one(), Zp(a, f.p())});
  line.push_back({f.zero(), f.one()});
  return line;
}

std::vector<Zp> t_values(const P1x4Point<Zp>& p) {
  return {p[0][0], p[0][1], p[1][0], p[1][1], p[2][0], p[2][1], p[3][0], p[3][1]};
}

const std::vector<long long>& delta_multiples() {
  static const std::vector<long long> d = grouprep::degenerate_delta_multiples();
  return d;
}

Json nu_json(const unproj::FamilyParams<Zp>& p) {
  Json j = Json::array();
  for (const auto& v : p.nu) j.push_back(v.value());
  return j;
}

}  // namespace

std::string chart_string(std::uint8_t chart) {
  std::string s;
  for (int i = 0; i < 4; ++i) s += (chart >> i) & 1u ? '1' : '0';
  return s;
}

P1x4Point<Zp> to_projective(const PrimeField& f, const SurfacePoint& p) {
  P1x4Point<Zp> out;
  for (std::size_t i = 0; i < 4; ++i) {
    if ((p.chart >> i) & 1u) {
      out[i] = {f.zero(), f.one()};
    } else {
      out[i] = {f.one(), Zp(p.t[i], f.p())};
    }
  }
  return out;
}

SurfacePoint from_projective(const P1x4Point<Zp>& p) {
  SurfacePoint s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (p[i][0].is_zero()) {
      if (p[i][1].is_zero()) throw std::invalid_argument("(0:0) is not a point of P^1");
      s.chart = static_cast<std::uint8_t>(s.chart | (1u << i));
    } else {
      s.t[i] = (p[i][1] / p[i][0]).value();
    }
  }
  return s;
}

bool SurfacePointSet::contains(const SurfacePoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

std::string SurfacePointSet::dump() const {
  std::ostringstream os;
  os << q;
  for (auto v : nu) os << ' ' << v;
  os << ' ' << points.size() << '\n';
  for (const auto& p : points) {
    os << chart_string(p.chart);
    for (auto v : p.t) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

SurfacePointSet SurfacePointSet::parse(const std::string& text) {
  std::istringstream is(text);
  SurfacePointSet s;
  std::size_t count = 0;
  if (!(is >> s.q)) throw std::invalid_argument("point file: missing header");
  for (auto& v : s.nu) {
    if (!(is >> v)) throw std::invalid_argument("point file: short header");
  }
  if (!(is >> count)) throw std::invalid_argument("point file: missing count");
  for (std::size_t k = 0; k < count; ++k) {
    std::string chart;
    SurfacePoint p;
    if (!(is >> chart) || chart.size() != 4) throw std::invalid_argument("point file: bad chart");
    for (int i = 0; i < 4; ++i) {
      if (chart[static_cast<std::size_t>(i)] == '1') p.chart = static_cast<std::uint8_t>(p.chart | (1u << i));
    }
    for (auto& v : p.t) {
      if (!(is >> v) || v >= s.q) throw std::invalid_argument("point file: bad coordinate");
    }
    s.points.push_back(p);
  }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("point file: trailing data");
  if (!std::is_sorted(s.points.begin(), s.points.end())) throw std::invalid_argument("point file: unsorted");
  return s;
}

unproj::FamilyParams<Zp> params_from(const PrimeField& f, const std::array<std::uint64_t, 5>& nu) {
  unproj::FamilyParams<Zp> p;
  for (std::size_t k = 0; k < 5; ++k) p.nu[k] = Zp(nu[k] % f.p(), f.p());
  return p;
}

SurfacePointSet enumerate_surface(const PrimeField& f, const unproj::FamilyParams<Zp>& p,
                                  unsigned threads) {
  const auto line = projective_line(f);
  const auto z2 = build_z2(f, p);
  const Zp one = f.one();
  auto work = [&](std::size_t begin, std::size_t end, std::vector<SurfacePoint>& out) {
    for (std::size_t a = begin; a < end; ++a)
      for (const auto& p1 : line)
        for (const auto& p2 : line) {
          const auto& p0 = line[a];
          Zp A = p0[1] * p1[0] * p2[0];
          Zp B = p0[0] * p1[1] * p2[1];
          auto test = [&](const P1Point<Zp>& p3) {
            P1x4Point<Zp> pt{p0, p1, p2, p3};
            if (alg::evaluate(z2, t_values(pt), one).is_zero()) out.push_back(from_projective(pt));
          };
          if (A.is_zero() && B.is_zero()) {
            for (const auto& p3 : line) test(p3);
          } else {
            test({B, -A});
          }
        }
  };
  const std::size_t n = line.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::vector<SurfacePoint>> parts(threads);
  if (threads == 1) {
    work(0, n, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back(work, n * k / threads, n * (k + 1) / threads, std::ref(parts[k]));
    }
    for (auto& th : pool) th.join();
  }
  SurfacePointSet s;
  s.q = f.p();
  for (std::size_t k = 0; k < 5; ++k) s.nu[k] = p.nu[k].value();
  for (auto& part : parts) s.points.insert(s.points.end(), part.begin(), part.end());
  std::sort(s.points.begin(), s.points.end());
  return s;
}

std::vector<Zp> sigma_coordinates(const PrimeField& f, const P1x4Point<Zp>& p) {
  const auto& s = sigma_map();
  auto tv = t_values(p);
  std::vector<Zp> out;
  for (int v = 0; v < 16; ++v) {
    const auto& m = s.image(v).mono;
    Zp acc = f.one();
    for (int k = 0; k < 8; ++k) {
      for (int e = 0; e < m[k]; ++e) acc = acc * tv[static_cast<std::size_t>(k)];
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<WeightedPoint> image_points(const PrimeField& f, const SurfacePointSet& s) {
  std::set<WeightedPoint> out;
  for (const auto& p : s.points) out.insert(grouprep::canonical_point(f, sigma_coordinates(f, to_projective(f, p))));
  return {out.begin(), out.end()};
}

std::vector<WeightedPoint> sigma_image(const PrimeField& f) {
  const auto line = projective_line(f);
  std::set<WeightedPoint> out;
  for (const auto& p0 : line)
    for (const auto& p1 : line)
      for (const auto& p2 : line)
        for (const auto& p3 : line) out.insert(grouprep::canonical_point(f, sigma_coordinates(f, {p0, p1, p2, p3})));
  return {out.begin(), out.end()};
}

std::size_t jacobian_rank(const PrimeField& f, const unproj::FamilyParams<Zp>& p, const SurfacePoint& pt) {
  const auto z1f = alg::convert(z1(), f);
  const auto z2f = build_z2(f, p);
  const auto tv = t_values(to_projective(f, pt));
  alg::Matrix<Zp> m(2);
  for (int i = 0; i < 4; ++i) {
    int free_var = alg::t_var(i, (pt.chart >> i) & 1u ? 0 : 1);
    m[0].push_back(alg::evaluate(z1f.derivative(free_var), tv, f.one()));
    m[1].push_back(alg::evaluate(z2f.derivative(free_var), tv, f.one()));
  }
  return alg::rank(m);
}

FreeSmoothData inspect_free_and_smooth(const PrimeField& f, const unproj::FamilyParams<Zp>& p,
                                       const SurfacePointSet& s, const FiniteProjGroup<Zp>& g) {
  FreeSmoothData out;
  out.points = s.points.size();
  const auto z1f = alg::convert(z1(), f);
  const auto z2f = build_z2(f, p);
  std::array<Poly<Zp>, 8> d1{z1f, z1f, z1f, z1f, z1f, z1f, z1f, z1f}, d2{z2f, z2f, z2f, z2f, z2f, z2f, z2f, z2f};
  for (int v = 0; v < 8; ++v) {
    d1[static_cast<std::size_t>(v)] = z1f.derivative(v);
    d2[static_cast<std::size_t>(v)] = z2f.derivative(v);
  }
  for (const auto& pt : s.points) {
    auto proj = to_projective(f, pt);
    auto tv = t_values(proj);
    alg::Matrix<Zp> m(2);
    for (int i = 0; i < 4; ++i) {
      auto v = static_cast<std::size_t>(alg::t_var(i, (pt.chart >> i) & 1u ? 0 : 1));
      m[0].push_back(alg::evaluate(d1[v], tv, f.one()));
      m[1].push_back(alg::evaluate(d2[v], tv, f.one()));
    }
    if (alg::rank(m) < 2) out.singular.push_back(pt);
    for (std::size_t k = 1; k < g.size(); ++k) {
      if (same_point(g.element(k).apply(proj), proj)) out.fixed.emplace_back(k, pt);
    }
  }
  return out;
}

unproj::FamilyParams<Zp> draw_params(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, f.p() - 1);
  unproj::FamilyParams<Zp> p;
  for (auto& v : p.nu) v = Zp(d(rng), f.p());
  return p;
}

std::array<Index4, 2> s_surface_indices(int i, int j, int a, int b) {
  std::array<Index4, 2> out{};
  std::size_t n = 0;
  for (const auto& t : alg::ell()) {
    if (t[static_cast<std::size_t>(i)] == alg::comp(a) && t[static_cast<std::size_t>(j)] == alg::comp(b)) {
      out.at(n++) = t;
    }
  }
  return out;
}

std::vector<WeightedPoint> s_surface_points(const PrimeField& f, int i, int j, int a, int b) {
  auto ys = s_surface_indices(i, j, a, b);
  const auto xi = static_cast<std::size_t>(alg::x_var(i, a)), xj = static_cast<std::size_t>(alg::x_var(j, b));
  const auto y0 = static_cast<std::size_t>(alg::y_var(ys[0])), y1 = static_cast<std::size_t>(alg::y_var(ys[1]));
  const std::uint64_t q = f.p();
  std::set<WeightedPoint> out;
  for (std::uint64_t u = 0; u < q; ++u)
    for (std::uint64_t v = 0; v < q; ++v)
      for (std::uint64_t w = 0; w < q; ++w)
        for (std::uint64_t z = 0; z < q; ++z) {
          if (u == 0 && v == 0 && w == 0 && z == 0) continue;
          Zp U(u, q), V(v, q), W(w, q), Z(z, q);
          if (!(W * Z - U * U * V * V).is_zero()) continue;
          std::vector<Zp> c(16, f.zero());
          c[xi] = U;
          c[xj] = V;
          c[y0] = W;
          c[y1] = Z;
          out.insert(grouprep::canonical_point(f, c));
        }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------

CheckReport check_enumeration(std::uint64_t seed) {
  Stopwatch sw;
  CheckReport r;
  r.id = "cover.enumeration";
  PrimeField f(13);
  std::mt19937_64 rng(seed);
  auto p = draw_params(f, rng);
  auto s = enumerate_surface(f, p);
  auto s2 = enumerate_surface(f, p, 3);
  r.expect(s.points == s2.points, "threaded enumeration differs from the serial one");
  r.expect(std::adjacent_find(s.points.begin(), s.points.end()) == s.points.end(), "duplicate points");
  const auto z1f = alg::convert(z1(), f);
  const auto z2f = build_z2(f, p);
  for (const auto& pt : s.points) {
    auto tv = t_values(to_projective(f, pt));
    bool on = alg::evaluate(z1f, tv, f.one()).is_zero() && alg::evaluate(z2f, tv, f.one()).is_zero();
    if (!on) {
      r.fail("point off the surface: " + chart_string(pt.chart));
      break;
    }
    for (int i = 0; i < 4; ++i) {
      if ((pt.chart >> i) & 1u) r.expect(pt.t[static_cast<std::size_t>(i)] == 0, "chart coordinate not zero");
    }
  }
  auto back = SurfacePointSet::parse(s.dump());
  r.expect(back.points == s.points && back.nu == s.nu && back.q == s.q, "dump/parse round trip failed");
  r.params["prime"] = 13;
  r.params["seed"] = seed;
  r.params["nu"] = nu_json(p);
  r.witness["count"] = s.points.size();
  r.witness["ambient_tuples"] = 14 * 14 * 14 * 14;
  sw.stamp(r);
  return r;
}

CheckReport check_free_action(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int draws) {
  Stopwatch sw;
  CheckReport r;
  r.id = "cover.free_action";
  std::mt19937_64 rng(seed);
  Json runs = Json::array();
  int redraws = 0;
  for (auto q : primes) {
    PrimeField f(q);
    auto group = lifted_group(f);
    r.expect(group.size() == 16, "lifted group over F" + std::to_string(q) + " is not of order 16");
    int done = 0, attempts = 0;
    while (done < draws) {
      if (++attempts > draws + 50) {
        r.fail("too many singular members over F" + std::to_string(q));
        break;
      }
      auto p = draw_params(f, rng);
      auto s = enumerate_surface(f, p);
      auto data = inspect_free_and_smooth(f, p, s, group);
      bool degenerate = unproj::is_degenerate(f, p, delta_multiples());
      Json run;
      run["prime"] = q;
      run["nu"] = nu_json(p);
      run["points"] = s.points.size();
      run["singular"] = data.singular.size();
      run["fixed"] = data.fixed.size();
      if (!data.fixed.empty() && !degenerate) {
        run["status"] = "fail";
        runs.push_back(run);
        r.fail("nondegenerate nu over F" + std::to_string(q) + " has a fixed point");
        ++done;
        continue;
      }
      if (!data.singular.empty() || !data.fixed.empty()) {
        run["status"] = "redrawn";
        runs.push_back(run);
        ++redraws;
        continue;
      }
      run["status"] = "pass";
      r.expect(s.points.size() % 2 == 0, "odd point count for a free involution");
      runs.push_back(run);
      ++done;
    }
  }
  r.params["primes"] = primes;
  r.params["seed"] = seed;
  r.params["draws"] = draws;
  r.witness["runs"] = runs;
  r.witness["redraws"] = redraws;
  sw.stamp(r);
  return r;
}

CheckReport check_orbit_closure(const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
  Stopwatch sw;
  CheckReport r;
  r.id = "cover.orbit_closure";
  std::mt19937_64 rng(seed);
  Json counts = Json::object();
  for (auto q : primes) {
    PrimeField f(q);
    auto group = lifted_group(f);
    auto p = draw_params(f, rng);
    auto s = enumerate_surface(f, p);
    std::size_t moved = 0;
    for (const auto& pt : s.points) {
      auto proj = to_projective(f, pt);
      for (const auto& g : group.elements()) {
        moved += s.contains(from_projective(g.apply(proj)));
      }
    }
    r.expect(moved == s.points.size() * group.size(), "G~ moves a point off the surface over F" + std::to_string(q));
    counts[std::to_string(q)] = s.points.size();
  }
  r.params["primes"] = primes;
  r.params["seed"] = seed;
  r.witness["points"] = counts;
  sw.stamp(r);
  return r;
}

CheckReport check_hplane_decomposition(std::uint64_t q) {
  Stopwatch sw;
  CheckReport r;
  r.id = "cover.hplane_decomposition";
  PrimeField f(q);
  auto image = sigma_image(f);
  std::set<WeightedPoint> image_set(image.begin(), image.end());
  std::vector<Poly<Zp>> ideal;
  for (const auto& g : unproj::build_unprojection_ideal().generators) ideal.push_back(alg::convert(g.poly, f));
  Json per_index = Json::object();
  for (const auto& t : alg::ell()) {
    // H_{a'b'c'd'} and its special point y_abcd.
    std::array<int, 4> zero_vars{};
    for (int i = 0; i < 4; ++i) zero_vars[static_cast<std::size_t>(i)] = alg::x_var(i, alg::comp(t[static_cast<std::size_t>(i)]));
    auto in_h = [&](const WeightedPoint& p) {
      for (int v : zero_vars) {
        if (!p.c[static_cast<std::size_t>(v)].is_zero()) return false;
      }
      return true;
    };
    std::set<WeightedPoint> u;
    std::vector<Zp> yc(16, f.zero());
    yc[static_cast<std::size_t>(alg::y_var(t))] = f.one();
    u.insert(grouprep::canonical_point(f, yc));
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        for (const auto& p : s_surface_points(f, i, j, t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)])) {
          u.insert(p);
        }
      }
    }
    std::size_t h_count = 0, twisted = 0;
    for (const auto& p : image) {
      if (!in_h(p)) continue;
      ++h_count;
      if (!u.count(p)) {
        r.fail("image point " + p.to_string() + " of H is outside the union");
        break;
      }
    }
    for (const auto& p : u) {
      r.expect(in_h(p), "S-point " + p.to_string() + " is not in H");
      bool on_y = true;
      for (const auto& g : ideal) on_y = on_y && alg::evaluate(g, p.c, f.one()).is_zero();
      r.expect(on_y, "S-point " + p.to_string() + " is not on Y");
      twisted += !image_set.count(p);
    }
    r.expect(u.size() - twisted == h_count, "image points of H and of the union differ");
    Json e;
    e["image_points"] = h_count;
    e["union_points"] = u.size();
    e["not_images"] = twisted;
    per_index[alg::index_string(alg::complement(t))] = e;
  }
  r.params["prime"] = q;
  r.witness["H"] = per_index;
  sw.stamp(r);
  return r;
}

}  // namespace upv::cover
