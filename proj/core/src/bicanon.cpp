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


#include "upv/bicanon/bicanon.hpp"

#include <map>
#include <random>
#include <set>

#include "upv/cover/enumerate.hpp"
#include "upv/unproj/rewriting.hpp"

namespace upv::bicanon {

using alg::Ambient;
using grouprep::Word;
using grouprep::WeightedPoint;
using unproj::FamilyParams;

namespace {

using P = Poly<Zp>;

Json nu_json(const FamilyParams<Zp>& p) { return p.strings(); }

std::vector<Zp> as_vector(const SPoint& s) { return {s.begin(), s.end()}; }

Zp eval(const P& f, const SPoint& s) { return alg::evaluate(f, as_vector(s), Zp(1, s[0].modulus())); }

// Cyclic relabelling 1 -> 2 -> 3 -> 1 of the alpha and beta indices.
Word shift_word(Word w, int k) {
  Word out = 0;
  for (int i = 1; i <= 3; ++i) {
    int j = (i - 1 + k) % 3 + 1;
    if (w & grouprep::alpha(i)) out |= grouprep::alpha(j);
    if (w & grouprep::beta(i)) out |= grouprep::beta(j);
  }
  return out;
}

int shift_index(int i, int k) { return (i - 1 + k) % 3 + 1; }

// Substitute s_i -> image_i in a polynomial on the s ambient.
P restrict_to(const PrimeField& f, const P& g, const std::array<P, 4>& images) {
  return alg::substitute_polys(g, std::vector<P>(images.begin(), images.end()), s_ambient(), f.one());
}

std::array<P, 4> s_vars(const PrimeField& f) {
  std::array<P, 4> v{P(s_ambient()), P(s_ambient()), P(s_ambient()), P(s_ambient())};
  for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = P::variable(s_ambient(), i, f.one());
  return v;
}

// Bit i-1 is set if some word of theta_i fixes the point.
unsigned theta_mask(const PrimeField& f, const WeightedPoint& pt) {
  unsigned mask = 0;
  for (int i = 1; i <= 3; ++i) {
    for (Word w : grouprep::theta_class(i)) {
      if (grouprep::act(f, w, pt) == pt) {
        mask |= 1u << (i - 1);
        break;
      }
    }
  }
  return mask;
}

FamilyParams<Zp> generic_params(const PrimeField& f, std::mt19937_64& rng) {
  const auto deltas = grouprep::degenerate_delta_multiples();
  for (;;) {
    auto p = cover::draw_params(f, rng);
    if (!unproj::is_degenerate(f, p, deltas)) return p;
  }
}

}  // namespace

const Ambient& s_ambient() {
  static const Ambient amb("S", {"s0", "s1", "s2", "s3"}, {1, 1, 1, 1});
  return amb;
}

std::optional<SPoint> s_coordinates(const PrimeField& f, const WeightedPoint& p) {
  const auto& c = p.c;
  const Zp half = f.one() / f.from_int(2);
  SPoint s{c[0] * c[0], f.zero(), f.zero(), f.zero()};
  for (int i = 1; i < 4; ++i) {
    const Zp& a = c[static_cast<std::size_t>(alg::x_var(i, 0))];
    const Zp& b = c[static_cast<std::size_t>(alg::x_var(i, 1))];
    s[static_cast<std::size_t>(i)] = (a * a + b * b) * half;
  }
  for (const auto& v : s) {
    if (!v.is_zero()) {
      Zp inv = v.inverse();
      for (auto& w : s) w = w * inv;
      return s;
    }
  }
  return std::nullopt;
}

std::optional<SPoint> node(const PrimeField& f, const FamilyParams<Zp>& p, int i) {
  if (i < 1 || i > 3) throw std::out_of_range("node index");
  const auto& nu = p.nu;
  if (nu[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  SPoint s{f.one(), f.one(), f.one(), f.one()};
  Zp rest = nu[0];
  for (int j = 1; j < 4; ++j) {
    if (j != i) rest = rest + nu[static_cast<std::size_t>(j)];
  }
  s[static_cast<std::size_t>(i)] = -rest / nu[static_cast<std::size_t>(i)];
  return s;
}

bool on_line(const SPoint& s, int i) { return s[0].is_zero() && s[static_cast<std::size_t>(i)].is_zero(); }

bool on_conic(const PrimeField& f, const FamilyParams<Zp>& p, const SPoint& s, int i) {
  if (!(s[0] + s[static_cast<std::size_t>(i)]).is_zero()) return false;
  return eval(conic_form(f, p, i), s).is_zero();
}

bool same_point(const SPoint& a, const SPoint& b) {
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = j + 1; k < 4; ++k) {
      if (!(a[j] * b[k] - a[k] * b[j]).is_zero()) return false;
    }
  }
  return true;
}

bool in_branch_locus(const PrimeField& f, const FamilyParams<Zp>& p, const SPoint& s, int i) {
  auto n = node(f, p, i);
  if (n && same_point(s, *n)) return true;
  return on_conic(f, p, s, shift_index(i, 1)) || on_line(s, shift_index(i, 2));
}

std::string to_string(const SPoint& s) {
  return "(" + s[0].to_string() + ":" + s[1].to_string() + ":" + s[2].to_string() + ":" + s[3].to_string() + ")";
}

P squaring_residual(const PrimeField& f, const FamilyParams<Zp>& p) {
  const Ambient& xy = Ambient::xy();
  const Zp half = f.one() / f.from_int(2);
  auto x = [&](int i, int a) { return P::variable(xy, alg::x_var(i, a), f.one()); };
  std::vector<P> sx;
  sx.push_back(x(0, 0) * x(0, 0));
  for (int i = 1; i < 4; ++i) sx.push_back((x(i, 0) * x(i, 0) + x(i, 1) * x(i, 1)) * half);
  P lx(xy), prod = P::constant(xy, f.one());
  for (int i = 0; i < 4; ++i) lx += sx[static_cast<std::size_t>(i)] * p.nu[static_cast<std::size_t>(i)];
  for (int i = 1; i < 4; ++i) prod = prod * (x(i, 0) + x(i, 1));
  P lhs = sx[0] * lx * lx - prod * prod * (p.nu[4] * p.nu[4]);
  P cubic_x = alg::substitute_polys(s_cubic(f, p), sx, xy, f.one());
  return unproj::reduce_by_rewriting(lhs + cubic_x);
}

// ---------------------------------------------------------------------------

CheckReport check_s3_cubic(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int draws) {
  Stopwatch sw;
  CheckReport r;
  r.id = "bicanon.s3_cubic";
  std::mt19937_64 rng(seed);
  std::size_t identities = 0;
  for (auto q : primes) {
    PrimeField f(q);
    const Ambient& xy = Ambient::xy();
    // (x_i0 + x_i1)^2 -> 2(s_i - s0).
    for (int i = 1; i < 4; ++i) {
      P a = P::variable(xy, alg::x_var(i, 0), f.one()), b = P::variable(xy, alg::x_var(i, 1), f.one());
      P x00 = P::variable(xy, alg::x_var(0, 0), f.one());
      P lhs = unproj::reduce_by_rewriting((a + b) * (a + b));
      P rhs = a * a + b * b - x00 * x00 * f.from_int(2);
      r.expect(lhs == rhs, "(x_i0 + x_i1)^2 does not rewrite to 2(s_i - s0)");
    }
    for (int k = 0; k < draws; ++k) {
      auto p = cover::draw_params(f, rng);
      P res = squaring_residual(f, p);
      if (!res.is_zero()) {
        r.fail("squaring identity fails over F" + std::to_string(q));
        r.witness["difference"] = res.to_string();
        r.witness["nu"] = nu_json(p);
        break;
      }
      ++identities;
    }
  }
  r.params["primes"] = primes;
  r.params["seed"] = seed;
  r.params["draws"] = draws;
  r.witness["identities"] = identities;
  r.witness["sign"] = "x00^2 l^2 - nu4^2 prod (x_i0 + x_i1)^2 = -S3(s(x))";
  sw.stamp(r);
  return r;
}

CheckReport check_point_images(const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
  Stopwatch sw;
  CheckReport r;
  r.id = "bicanon.point_images";
  std::mt19937_64 rng(seed);
  Json runs = Json::array();
  for (auto q : primes) {
    PrimeField f(q);
    auto p = cover::draw_params(f, rng);
    P cubic = s_cubic(f, p);
    auto pts = cover::image_points(f, cover::enumerate_surface(f, p));
    std::size_t on = 0, undefined = 0;
    for (const auto& pt : pts) {
      auto s = s_coordinates(f, pt);
      if (!s) {
        ++undefined;
        continue;
      }
      on += eval(cubic, *s).is_zero();
    }
    r.expect(undefined == 0, "a T-point lies in the base locus of s0..s3 over F" + std::to_string(q));
    r.expect(on == pts.size(), "a T-point image is off S3 over F" + std::to_string(q));
    r.expect(!pts.empty(), "no T-points over F" + std::to_string(q));
    runs.push_back({{"prime", q}, {"nu", nu_json(p)}, {"points", pts.size()}, {"on_cubic", on}});
  }
  r.params["primes"] = primes;
  r.params["seed"] = seed;
  r.witness["runs"] = runs;
  sw.stamp(r);
  return r;
}

CheckReport check_nodes(const std::vector<std::uint64_t>& primes, std::uint64_t seed, int draws) {
  Stopwatch sw;
  CheckReport r;
  r.id = "bicanon.nodes";
  std::mt19937_64 rng(seed);
  std::map<std::size_t, std::size_t> ranks;
  std::size_t checked = 0, collisions = 0;
  for (auto q : primes) {
    PrimeField f(q);
    for (int k = 0; k < draws; ++k) {
      auto p = cover::draw_params(f, rng);
      P cubic = s_cubic(f, p);
      std::array<P, 4> grad{cubic.derivative(0), cubic.derivative(1), cubic.derivative(2), cubic.derivative(3)};
      for (int i = 1; i <= 3; ++i) {
        auto n = node(f, p, i);
        if (!n) {
          r.fail("node not solvable");
          continue;
        }
        bool ok = eval(cubic, *n).is_zero();
        alg::Matrix<Zp> hess(4, std::vector<Zp>(4, f.zero()));
        for (std::size_t a = 0; a < 4; ++a) {
          ok = ok && eval(grad[a], *n).is_zero();
          for (std::size_t b = 0; b < 4; ++b) hess[a][b] = eval(grad[a].derivative(static_cast<int>(b)), *n);
        }
        if (!ok) {
          r.fail("S3 or its gradient is nonzero at n" + std::to_string(i) + " over F" + std::to_string(q));
          r.witness["nu"] = nu_json(p);
        }
        auto rk = alg::rank(hess);
        ++ranks[rk];
        ++checked;
        // The Euler vector spans the kernel; rank 3 means a nondegenerate
        // quadratic cone on the tangent directions. When l(1,1,1,1) = 0 the
        // three nodes collide at (1:1:1:1) and the point is worse.
        bool collide = (p.nu[0] + p.nu[1] + p.nu[2] + p.nu[3]).is_zero();
        collisions += collide;
        if ((rk == 3) == collide) {
          r.fail("Hessian rank " + std::to_string(rk) + " at n" + std::to_string(i) + " over F" + std::to_string(q));
          r.witness["nu"] = nu_json(p);
        }
      }
    }
  }
  // nu4 = 0: S3 = -s0 l^2 is reducible and has no isolated nodes.
  {
    PrimeField f(primes.front());
    FamilyParams<Zp> p{{f.from_int(1), f.from_int(2), f.from_int(3), f.from_int(5), f.zero()}};
    P cubic = s_cubic(f, p);
    P s0 = P::variable(s_ambient(), 0, f.one());
    P l = l_form(f, p);
    r.expect(cubic == -(s0 * l * l), "nu4 = 0 does not give -s0 l^2");
    r.witness["nu4_zero"] = "reducible, not applicable";
  }
  Json hist = Json::object();
  for (auto [k, v] : ranks) hist[std::to_string(k)] = v;
  r.witness["colliding_node_draws"] = collisions / 3;
  r.params["primes"] = primes;
  r.params["seed"] = seed;
  r.params["draws"] = draws;
  r.witness["nodes_checked"] = checked;
  r.witness["hessian_rank_histogram"] = hist;
  sw.stamp(r);
  return r;
}

CheckReport check_plane_sections(const std::vector<std::uint64_t>& primes, std::uint64_t seed) {
  Stopwatch sw;
  CheckReport r;
  r.id = "bicanon.plane_sections";
  std::mt19937_64 rng(seed);
  Json quotients = Json::array();
  for (auto q : primes) {
    PrimeField f(q);
    auto p = cover::draw_params(f, rng);
    P cubic = s_cubic(f, p);
    auto v = s_vars(f);
    for (int i = 1; i <= 3; ++i) {
      auto u = static_cast<std::size_t>(i);
      // Plane s_i = -s0: restriction = -s0 * C_i.
      auto img = v;
      img[u] = -v[0];
      P restricted = restrict_to(f, cubic, img);
      P conic = restrict_to(f, conic_form(f, p, i), img);
      auto quotient = restricted.divide_monomial(alg::unit_monomial(0));
      r.expect(quotient.has_value(), "restriction to s" + std::to_string(i) + " = -s0 is not divisible by s0");
      if (quotient) {
        r.expect(*quotient == -conic, "quotient differs from -C" + std::to_string(i));
        if (q == primes.front()) quotients.push_back(quotient->to_string());
      }
      // L_i lies on S3.
      auto line = v;
      line[0] = P(s_ambient());
      line[u] = P(s_ambient());
      r.expect(restrict_to(f, cubic, line).is_zero(), "L" + std::to_string(i) + " is not on S3");
      // N_jk = (s0 - s_i = l = 0): restriction to s_i = s0 is -s0 l^2.
      auto plane = v;
      plane[u] = v[0];
      P l = restrict_to(f, l_form(f, p), plane);
      r.expect(restrict_to(f, cubic, plane) == -(v[0] * l * l), "S3 on s0 = s" + std::to_string(i) + " is not -s0 l^2");
    }
  }
  r.params["primes"] = primes;
  r.params["seed"] = seed;
  r.witness["quotients"] = quotients;
  sw.stamp(r);
  return r;
}

CheckReport check_branch_loci(std::uint64_t q, std::uint64_t seed, int draws) {
  Stopwatch sw;
  CheckReport r;
  r.id = "bicanon.branch_loci";
  PrimeField f(q);
  std::mt19937_64 rng(seed);
  std::vector<Word> words;
  for (int i = 1; i <= 3; ++i) {
    for (Word w : grouprep::theta_class(i)) words.push_back(w);
  }
  Json runs = Json::array();
  std::map<int, std::size_t> line_hits;
  for (int k = 0; k < draws; ++k) {
    auto p = generic_params(f, rng);
    auto pts = cover::image_points(f, cover::enumerate_surface(f, p));
    auto stab = grouprep::stabilizer_classification(f, pts, words);
    // Classes fixing each point.
    std::vector<unsigned> classes(pts.size(), 0);
    for (std::size_t w = 0; w < words.size(); ++w) {
      for (auto idx : stab.fixed[w]) classes[idx] |= 1u << (w / 8);
    }
    Json per_word = Json::object();
    for (std::size_t w = 0; w < words.size(); ++w) {
      int i = static_cast<int>(w / 8) + 1;
      std::size_t outside = 0;
      for (auto idx : stab.fixed[w]) {
        auto s = s_coordinates(f, pts[idx]);
        if (!s) {
          ++outside;
          continue;
        }
        bool ok = in_branch_locus(f, p, *s, i);
        if (!ok && classes[idx] == 7u) {
          ok = in_branch_locus(f, p, *s, 1) || in_branch_locus(f, p, *s, 2) || in_branch_locus(f, p, *s, 3);
        }
        if (!ok) {
          ++outside;
          r.witness["offending_point"] = pts[idx].to_string();
          r.witness["offending_image"] = to_string(*s);
        }
      }
      if (outside) r.fail(grouprep::word_string(words[w]) + " has fixed points outside D" + std::to_string(i));
      per_word[grouprep::word_string(words[w])] = stab.fixed[w].size();
    }
    // The itemized contributions, for theta_1 and its cyclic relabellings.
    auto fixed_of = [&](Word w) -> const std::vector<std::size_t>& {
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (words[j] == w) return stab.fixed[j];
      }
      throw std::logic_error("word not in a theta class");
    };
    for (int sh = 0; sh < 3; ++sh) {
      int i = shift_index(1, sh);
      Word b1b2 = shift_word(grouprep::beta(1) | grouprep::beta(2), sh);
      Word a2a3b2b3 =
          shift_word(grouprep::alpha(2) | grouprep::alpha(3) | grouprep::beta(2) | grouprep::beta(3), sh);
      Word a1a3 = shift_word(grouprep::alpha(1) | grouprep::alpha(3), sh);
      int li = shift_index(3, sh);
      for (auto idx : fixed_of(b1b2)) {
        if (classes[idx] == 7u) continue;
        auto s = s_coordinates(f, pts[idx]);
        r.expect(s && on_line(*s, li), grouprep::word_string(b1b2) + " fixes a point off L" + std::to_string(li));
        ++line_hits[li];
      }
      auto n = node(f, p, i);
      for (auto idx : fixed_of(a2a3b2b3)) {
        if (classes[idx] == 7u) continue;
        auto s = s_coordinates(f, pts[idx]);
        r.expect(s && n && same_point(*s, *n),
                 grouprep::word_string(a2a3b2b3) + " fixes a point not over n" + std::to_string(i));
      }
      for (auto idx : fixed_of(a1a3)) {
        if (classes[idx] == 7u) continue;
        r.fail(grouprep::word_string(a1a3) + " has fixed points");
        r.witness["a1a3_point_classes"] = classes[idx];
        auto s = s_coordinates(f, pts[idx]);
        if (s) r.witness["a1a3_image"] = to_string(*s);
        break;
      }
    }
    runs.push_back({{"nu", nu_json(p)}, {"points", pts.size()}, {"fixed", per_word}});
  }
  for (int li = 1; li <= 3; ++li) {
    r.expect(line_hits[li] > 0, "no fixed points over L" + std::to_string(li) + " in any draw");
  }
  r.params["prime"] = q;
  r.params["seed"] = seed;
  r.params["draws"] = draws;
  r.witness["runs"] = runs;
  sw.stamp(r);
  return r;
}

CheckReport check_stabilizers(std::uint64_t q, std::uint64_t seed) {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.stabilizers";
  PrimeField f(q);
  std::mt19937_64 rng(seed);
  auto p = generic_params(f, rng);
  auto pts = cover::image_points(f, cover::enumerate_surface(f, p));
  std::vector<Word> words = grouprep::subgroup_g();
  const Word b1b2 = grouprep::beta(1) | grouprep::beta(2);
  words.push_back(b1b2);
  auto stab = grouprep::stabilizer_classification(f, pts, words);
  Json counts = Json::object();
  for (std::size_t w = 0; w < words.size(); ++w) {
    counts[grouprep::word_string(words[w])] = stab.fixed[w].size();
    if (words[w] == 0) {
      r.expect(stab.fixed[w].size() == pts.size(), "the identity does not fix every point");
    } else if (w < 8) {
      r.expect(stab.fixed[w].empty(), grouprep::word_string(words[w]) + " in G has a fixed point");
    }
  }
  const auto& fb = stab.fixed.back();
  r.expect(!fb.empty(), "b1*b2 fixes no point");
  std::size_t full_inertia = 0;
  for (auto idx : fb) {
    auto s = s_coordinates(f, pts[idx]);
    // Points with inertia all of Gamma lie on two ramification curves.
    if (theta_mask(f, pts[idx]) == 7u) {
      ++full_inertia;
      continue;
    }
    r.expect(s && on_line(*s, 3), "b1*b2 fixes a point off L3");
  }
  r.witness["b1*b2_full_inertia"] = full_inertia;
  r.params["prime"] = q;
  r.params["seed"] = seed;
  r.params["nu"] = nu_json(p);
  r.witness["points"] = pts.size();
  r.witness["fixed"] = counts;
  sw.stamp(r);
  return r;
}

}  // namespace upv::bicanon
