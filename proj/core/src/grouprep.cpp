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


#include "upv/grouprep/grouprep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "upv/unproj/ideals.hpp"

namespace upv::grouprep {

using alg::Ambient;
using alg::GaussRational;
using alg::Index4;
using alg::Monomial;
using alg::PrimeField;
using alg::Zp;
using alg::unit_monomial;
using alg::x_var;
using alg::y_var;

namespace {

const Ambient& xy() { return Ambient::xy(); }

struct SignedImage {
  int sign;
  int var;
};

// Image of every XY variable under one generator (bit k).
std::vector<SignedImage> generator_images(int k) {
  std::vector<SignedImage> img(16);
  for (int v = 0; v < 16; ++v) img[static_cast<std::size_t>(v)] = {1, v};
  if (k < 3) {
    int i = k + 1;
    img[static_cast<std::size_t>(x_var(0, 0))] = {1, x_var(0, 1)};
    img[static_cast<std::size_t>(x_var(0, 1))] = {1, x_var(0, 0)};
    img[static_cast<std::size_t>(x_var(i, 0))] = {1, x_var(i, 1)};
    img[static_cast<std::size_t>(x_var(i, 1))] = {1, x_var(i, 0)};
    for (const auto& t : alg::ell()) {
      Index4 u = t;
      u[0] = alg::comp(u[0]);
      u[static_cast<std::size_t>(i)] = alg::comp(u[static_cast<std::size_t>(i)]);
      img[static_cast<std::size_t>(y_var(t))] = {1, y_var(u)};
    }
  } else {
    int i = k - 2;
    img[static_cast<std::size_t>(x_var(i, 0))] = {-1, x_var(i, 0)};
    img[static_cast<std::size_t>(x_var(i, 1))] = {-1, x_var(i, 1)};
    for (const auto& t : alg::ell()) img[static_cast<std::size_t>(y_var(t))] = {-1, y_var(t)};
  }
  return img;
}

std::vector<SignedImage> word_images(Word w) {
  std::vector<SignedImage> cur(16);
  for (int v = 0; v < 16; ++v) cur[static_cast<std::size_t>(v)] = {1, v};
  for (int k = 0; k < 6; ++k) {
    if (!(w & (1u << k))) continue;
    auto g = generator_images(k);
    for (auto& c : cur) {
      const auto& gi = g[static_cast<std::size_t>(c.var)];
      c = {c.sign * gi.sign, gi.var};
    }
  }
  return cur;
}

Poly<Rational> var(int v) { return Poly<Rational>::variable(xy(), v, Rational(1)); }

Poly<Rational> monic(Poly<Rational> p) {
  if (p.is_zero()) return p;
  Rational lead = p.leading_term().second;
  return p * lead.inverse();
}

}  // namespace

std::string word_string(Word w) {
  static const char* names[6] = {"a1", "a2", "a3", "b1", "b2", "b3"};
  std::string out;
  for (int k = 0; k < 6; ++k) {
    if (!(w & (1u << k))) continue;
    if (!out.empty()) out += "*";
    out += names[k];
  }
  return out.empty() ? "1" : out;
}

Word parse_word(const std::string& s) {
  if (s == "1") return 0;
  Word w = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('*', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.size() != 2 || (tok[0] != 'a' && tok[0] != 'b') || tok[1] < '1' || tok[1] > '3') {
      throw std::invalid_argument("bad group word '" + s + "'");
    }
    int i = tok[1] - '0';
    w ^= tok[0] == 'a' ? alpha(i) : beta(i);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return w;
}

int word_length(Word w) { return __builtin_popcount(w); }

SignedAction action(Word w) {
  if (w >= 64) throw std::invalid_argument("word out of range");
  auto imgs = word_images(w);
  std::vector<MonomialMap<Rational>::Image> m;
  for (const auto& im : imgs) m.push_back({Rational(im.sign), unit_monomial(im.var)});
  return {w, MonomialMap<Rational>(xy(), xy(), std::move(m))};
}

std::vector<SignedAction> generator_actions() {
  std::vector<SignedAction> out;
  for (int k = 0; k < 6; ++k) out.push_back(action(static_cast<Word>(1u << k)));
  return out;
}

std::vector<Word> subgroup_g() {
  const Word g1 = alpha(1) | beta(2), g2 = alpha(2) | beta(3), g3 = alpha(3) | beta(1);
  std::vector<Word> out;
  for (int m = 0; m < 8; ++m) {
    Word w = 0;
    if (m & 1) w ^= g1;
    if (m & 2) w ^= g2;
    if (m & 4) w ^= g3;
    out.push_back(w);
  }
  return out;
}

std::vector<Word> subgroup_h() {
  std::vector<Word> out;
  for (Word w = 0; w < 64; ++w) {
    if (word_length(w) % 2 == 0) out.push_back(w);
  }
  return out;
}

std::vector<Word> theta_class(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("theta index");
  std::vector<Word> out;
  for (Word g : subgroup_g()) out.push_back(static_cast<Word>((alpha(i) | beta(i)) ^ g));
  return out;
}

std::string to_string(Sector s) {
  switch (s) {
    case Sector::kPlusPlus: return "(+,+)";
    case Sector::kMinusPlus: return "(-,+)";
    case Sector::kZeroMinus: return "(0,-)";
  }
  return "?";
}

LinearFixedLocus fixed_locus(Word g, Sector sector) {
  auto imgs = word_images(g);
  for (int v = 0; v < 16; ++v) {
    const auto& im = imgs[static_cast<std::size_t>(v)];
    const auto& back = imgs[static_cast<std::size_t>(im.var)];
    if (back.var != v || back.sign * im.sign != 1) throw std::invalid_argument("not an involution");
  }
  LinearFixedLocus out{g, sector, {}, {}};
  std::set<std::string> seen;
  auto add = [&](std::vector<Poly<Rational>>& dst, Poly<Rational> p) {
    if (p.is_zero()) return;
    p = monic(p);
    if (seen.insert(p.to_string()).second) dst.push_back(p);
  };
  int ex = sector == Sector::kMinusPlus ? -1 : 1;
  int ey = sector == Sector::kZeroMinus ? -1 : 1;
  for (int v = 0; v < 16; ++v) {
    const auto& im = imgs[static_cast<std::size_t>(v)];
    bool is_x = v < 8;
    if (is_x && sector == Sector::kZeroMinus) {
      add(out.x_constraints, var(v));
      continue;
    }
    int e = is_x ? ex : ey;
    Poly<Rational> c = var(im.var) * Rational(im.sign) - var(v) * Rational(e);
    add(is_x ? out.x_constraints : out.y_constraints, c);
  }
  return out;
}

std::vector<long long> degenerate_delta_multiples() {
  // On the (-,+) locus of a1*a2*a3*b1*b2*b3 inside V: x01 = -x00 and
  // x_i0 = x_i1, so the quadrics force x_i0^2 = -x00^2. x00 = 0 would kill
  // every x and then every y, so normalize x00 = 1 and solve the cubics.
  const Word g = 0x3f;
  auto locus = fixed_locus(g, Sector::kMinusPlus);
  auto ideal = unproj::build_v_ideal();
  std::set<long long> out;
  GaussRational i = GaussRational::i();
  for (int signs = 0; signs < 8; ++signs) {
    std::vector<GaussRational> pt(16, GaussRational(0));
    pt[0] = 1;
    pt[1] = -1;
    for (int k = 1; k <= 3; ++k) {
      GaussRational e = (signs >> (k - 1)) & 1 ? -i : i;
      pt[static_cast<std::size_t>(x_var(k, 0))] = e;
      pt[static_cast<std::size_t>(x_var(k, 1))] = e;
    }
    for (const auto& t : alg::ell()) {
      GaussRational num = 1;
      for (int k = 1; k <= 3; ++k) {
        num = num * pt[static_cast<std::size_t>(x_var(k, alg::comp(t[static_cast<std::size_t>(k)])))];
      }
      pt[static_cast<std::size_t>(y_var(t))] = num / pt[static_cast<std::size_t>(x_var(0, t[0]))];
    }
    bool on_locus = true;
    for (const auto& gen : ideal.generators) {
      if (!alg::evaluate(alg::convert(gen.poly, alg::GaussianField{}), pt, GaussRational(1)).is_zero()) {
        on_locus = false;
      }
    }
    for (const auto& c : locus.x_constraints) {
      if (!alg::evaluate(alg::convert(c, alg::GaussianField{}), pt, GaussRational(1)).is_zero()) {
        on_locus = false;
      }
    }
    for (const auto& c : locus.y_constraints) {
      if (!alg::evaluate(alg::convert(c, alg::GaussianField{}), pt, GaussRational(1)).is_zero()) {
        on_locus = false;
      }
    }
    if (!on_locus) continue;
    GaussRational delta =
        alg::evaluate(alg::convert(unproj::invariant_y(), alg::GaussianField{}), pt, GaussRational(1));
    if (!delta.re().is_zero() || !delta.im().is_integer()) {
      throw std::logic_error("delta is not an integer multiple of i");
    }
    out.insert(delta.im().numerator().get_si());
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------

std::string WeightedPoint::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += k == 8 ? " : " : " ";
    out += c[k].to_string();
  }
  return out + ")";
}

WeightedPoint canonical_point(const PrimeField& f, std::vector<Zp> coords) {
  if (coords.size() != 16) throw std::invalid_argument("weighted point needs 16 coordinates");
  for (std::size_t k = 0; k < 8; ++k) {
    if (coords[k].is_zero()) continue;
    Zp lam = coords[k].inverse();
    Zp lam2 = lam * lam;
    for (std::size_t j = 0; j < 16; ++j) coords[j] = coords[j] * (j < 8 ? lam : lam2);
    return {coords};
  }
  for (std::size_t k = 8; k < 16; ++k) {
    if (coords[k].is_zero()) continue;
    Zp target = f.is_square(coords[k]) ? f.one() : f.nonresidue();
    Zp scale = target / coords[k];  // a square by construction
    for (std::size_t j = 8; j < 16; ++j) coords[j] = coords[j] * scale;
    return {coords};
  }
  throw std::invalid_argument("all coordinates vanish");
}

WeightedPoint act(const PrimeField& f, Word g, const WeightedPoint& p) {
  auto imgs = word_images(g);
  std::vector<Zp> q(16);
  for (std::size_t v = 0; v < 16; ++v) {
    const auto& im = imgs[v];
    Zp val = p.c[static_cast<std::size_t>(im.var)];
    q[v] = im.sign < 0 ? -val : val;
  }
  return canonical_point(f, std::move(q));
}

StabilizerData stabilizer_classification(const PrimeField& f,
                                         const std::vector<WeightedPoint>& points,
                                         const std::vector<Word>& words) {
  StabilizerData out{words, std::vector<std::vector<std::size_t>>(words.size())};
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (act(f, words[w], points[k]) == points[k]) out.fixed[w].push_back(k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

namespace {

bool same_map(const MonomialMap<Rational>& a, const MonomialMap<Rational>& b) { return a == b; }

MonomialMap<Rational> compose(const SignedAction& g, const SignedAction& h) {
  return g.map.after(h.map);
}

// Whether p equals +-(some generator of J); returns the sign or 0.
int match_generator(const Poly<Rational>& p, const std::vector<Poly<Rational>>& gens) {
  for (const auto& g : gens) {
    if (p == g) return 1;
    if (p == -g) return -1;
  }
  return 0;
}

}  // namespace

CheckReport check_generators() {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.generators";
  auto gens = generator_actions();
  auto id = MonomialMap<Rational>::identity(xy(), Rational(1));
  int involutions = 0, commuting = 0;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (same_map(compose(gens[a], gens[a]), id)) ++involutions;
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (same_map(compose(gens[a], gens[b]), compose(gens[b], gens[a]))) ++commuting;
    }
  }
  r.expect(involutions == 6, "a generator is not an involution");
  r.expect(commuting == 15, "generators do not commute pairwise");
  r.witness["involutions"] = involutions;
  r.witness["commuting_pairs"] = commuting;

  const auto& a1 = gens[0].map;
  const auto& b1 = gens[3].map;
  const auto& b2 = gens[4].map;
  r.expect(a1(var(x_var(0, 0))) == var(x_var(0, 1)), "a1(x00) != x01");
  for (const auto& t : alg::ell()) {
    Index4 u{alg::comp(t[0]), alg::comp(t[1]), t[2], t[3]};
    r.expect(a1(var(y_var(t))) == var(y_var(u)), "a1(y" + alg::index_string(t) + ") wrong");
  }
  r.expect(b2(var(x_var(2, 0))) == -var(x_var(2, 0)), "b2(x20) != -x20");
  r.expect(b2(var(y_var({0, 0, 0, 0}))) == -var(y_var({0, 0, 0, 0})), "b2(y0000) != -y0000");
  r.expect(b1(var(y_var({0, 0, 0, 0}))) == -var(y_var({0, 0, 0, 0})), "b1(y0000) != -y0000");
  auto g = action(alpha(1) | beta(2));
  r.expect(same_map(compose(g, g), id), "(a1*b2)^2 is not the identity");

  // X is invariant: each quadric goes to +- a quadric.
  auto xq = unproj::build_x_ideal().polys();
  int quadric_images = 0;
  for (const auto& gen : gens) {
    for (const auto& q : xq) {
      Poly<Rational> img = gen.map(q);
      bool ok = match_generator(img, xq) != 0 || unproj::in_x_quadric_ideal(img);
      r.expect(ok, gen.name() + " moves a quadric out of the ideal of X");
      quadric_images += ok;
    }
  }
  r.witness["quadric_images_in_ideal"] = quadric_images;
  sw.stamp(r);
  return r;
}

CheckReport check_subgroups() {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.subgroups";
  auto g = subgroup_g();
  auto h = subgroup_h();
  std::set<Word> gs(g.begin(), g.end()), hs(h.begin(), h.end());
  r.expect(gs.size() == 8, "|G| != 8");
  r.expect(hs.size() == 32, "|H| != 32");
  for (Word a : gs) {
    for (Word b : gs) r.expect(gs.count(static_cast<Word>(a ^ b)) == 1, "G is not closed");
    r.expect(hs.count(a) == 1, "G is not inside H");
  }
  std::set<Word> all;
  for (int i = 1; i <= 3; ++i) {
    auto th = theta_class(i);
    std::set<Word> ts(th.begin(), th.end());
    r.expect(ts.size() == 8, "theta class has wrong size");
    for (Word w : ts) {
      r.expect(all.insert(w).second, "theta classes intersect");
      r.expect(hs.count(w) == 1, "theta element outside H");
    }
    Json names = Json::array();
    for (Word w : th) names.push_back(word_string(w));
    r.witness["theta" + std::to_string(i)] = names;
  }
  const std::vector<std::string> expected = {"a1*b1",       "b1*b2", "a1*a2*b1*b3", "a1*a3",
                                             "a2*b1*b2*b3", "a3*b2", "a1*a2*a3*b3", "a2*a3*b2*b3"};
  std::set<Word> exp_set;
  for (const auto& s : expected) exp_set.insert(parse_word(s));
  auto th1 = theta_class(1);
  r.expect(exp_set == std::set<Word>(th1.begin(), th1.end()), "theta1 differs from the listed elements");
  r.witness["order_G"] = gs.size();
  r.witness["order_H"] = hs.size();
  sw.stamp(r);
  return r;
}

CheckReport check_regular_representation() {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.regular_representation";
  Json traces = Json::object();
  for (Word w : subgroup_g()) {
    auto imgs = word_images(w);
    int tr = 0;
    for (int v = 0; v < 8; ++v) {
      if (imgs[static_cast<std::size_t>(v)].var == v) tr += imgs[static_cast<std::size_t>(v)].sign;
    }
    // x00 + x01 must be an eigenvector; the quotient trace drops its eigenvalue.
    auto h = unproj::hyperplane();
    Poly<Rational> img = action(w).map(h);
    int ev = img == h ? 1 : (img == -h ? -1 : 0);
    r.expect(ev != 0, "x00 + x01 is not an eigenvector of " + word_string(w));
    int quotient = tr - ev;
    int want = w == 0 ? 8 : 0, want_q = w == 0 ? 7 : -1;
    r.expect(tr == want, "trace of " + word_string(w) + " on the x span is " + std::to_string(tr));
    r.expect(quotient == want_q, "quotient trace of " + word_string(w) + " is " + std::to_string(quotient));
    traces[word_string(w)] = {tr, quotient};
  }
  r.witness["traces"] = traces;

  // Character sums in y: simultaneous eigenvectors with distinct characters.
  std::set<std::vector<int>> characters;
  for (int k = 0; k < 8; ++k) {
    std::array<int, 3> kk{k & 1, (k >> 1) & 1, (k >> 2) & 1};
    Poly<Rational> e = unproj::y_character_sum(kk);
    std::vector<int> chi;
    for (Word w : subgroup_g()) {
      Poly<Rational> img = action(w).map(e);
      int ev = img == e ? 1 : (img == -e ? -1 : 0);
      r.expect(ev != 0, "character sum " + std::to_string(k) + " is not an eigenvector");
      chi.push_back(ev);
    }
    characters.insert(chi);
  }
  r.expect(characters.size() == 8, "character sums do not realize 8 distinct characters");
  r.witness["distinct_characters"] = characters.size();
  Poly<Rational> inv = unproj::y_character_sum({1, 1, 1});
  r.expect(inv == unproj::invariant_y(), "sum (-1)^(b+c+d) y != sum (-1)^a y");
  for (Word w : subgroup_g()) {
    r.expect(action(w).map(inv) == inv, "invariant y-sum moved by " + word_string(w));
  }
  sw.stamp(r);
  return r;
}

CheckReport check_fixed_loci() {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.fixed_loci";
  auto a1b2 = fixed_locus(alpha(1) | beta(2), Sector::kPlusPlus);
  std::set<std::string> got;
  for (const auto& c : a1b2.x_constraints) got.insert(c.to_string());
  std::set<std::string> want_x = {"x00 + -1*x01", "x10 + -1*x11", "x20", "x21"};
  r.expect(got == want_x, "Fix(+,+)(a1*b2) x part differs");
  r.expect(a1b2.y_constraints.size() == 4, "Fix(+,+)(a1*b2) should have 4 y conditions");
  for (const auto& c : a1b2.y_constraints) {
    r.expect(c.size() == 2, "y condition is not a two-term sum");
    for (const auto& [m, coef] : c.terms()) r.expect(coef.is_one(), "y condition is not y + y'");
  }
  auto full = fixed_locus(0x3f, Sector::kMinusPlus);
  got.clear();
  for (const auto& c : full.x_constraints) got.insert(c.to_string());
  std::set<std::string> want_full = {"x00 + x01", "x10 + -1*x11", "x20 + -1*x21", "x30 + -1*x31"};
  r.expect(got == want_full, "Fix(-,+)(a1a2a3b1b2b3) x part differs");
  for (const auto& c : full.y_constraints) {
    auto it = c.terms().begin();
    Index4 idx{};
    for (const auto& t : alg::ell()) {
      if (it->first[y_var(t)]) idx = t;
    }
    r.expect(c.coefficient(unit_monomial(y_var(alg::complement(idx)))).has_value(),
             "Fix(-,+) y condition does not pair complementary indices");
  }
  auto ident = fixed_locus(0, Sector::kPlusPlus);
  r.expect(ident.x_constraints.empty() && ident.y_constraints.empty(), "identity has constraints");

  // Eigen-condition property for every nontrivial element of G and sector.
  int checked = 0;
  for (Word w : subgroup_g()) {
    if (w == 0) continue;
    for (Sector s : {Sector::kPlusPlus, Sector::kMinusPlus, Sector::kZeroMinus}) {
      auto loc = fixed_locus(w, s);
      if (s == Sector::kZeroMinus) r.expect(loc.x_constraints.size() == 8, "(0,-) lacks x = 0");
      auto m = action(w).map;
      for (const auto* list : {&loc.x_constraints, &loc.y_constraints}) {
        for (const auto& c : *list) {
          Poly<Rational> img = m(c);
          ++checked;
          if (img == c || img == -c) continue;
          // x = 0 in the (0,-) sector: g permutes the coordinate conditions.
          bool permuted = s == Sector::kZeroMinus && list == &loc.x_constraints &&
                          match_generator(img, *list) != 0;
          r.expect(permuted, "constraint is not an eigenvector");
        }
      }
    }
  }
  r.witness["constraints_checked"] = checked;
  sw.stamp(r);
  return r;
}

CheckReport check_ideal_invariance() {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.ideal_invariance";
  auto gens = unproj::build_unprojection_ideal().polys();
  int exact = 0, mod_quadrics = 0;
  for (Word w = 0; w < 64; ++w) {
    auto m = action(w).map;
    for (const auto& g : gens) {
      Poly<Rational> img = m(g);
      if (match_generator(img, gens) != 0) {
        ++exact;
        continue;
      }
      bool ok = false;
      for (const auto& h : gens) {
        if (unproj::in_x_quadric_ideal(img - h) || unproj::in_x_quadric_ideal(img + h)) {
          ok = true;
          break;
        }
      }
      r.expect(ok, word_string(w) + " sends " + g.to_string() + " outside J");
      mod_quadrics += ok;
    }
  }
  r.witness["exact_images"] = exact;
  r.witness["images_equal_mod_quadrics"] = mod_quadrics;
  sw.stamp(r);
  return r;
}

CheckReport check_q_invariance(std::uint64_t seed) {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.q_invariance";
  PrimeField f(13);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, 12);
  std::set<Word> hs;
  for (Word w : subgroup_h()) hs.insert(w);
  int draws = 0;
  while (draws < 20) {
    unproj::FamilyParams<Zp> p;
    for (auto& v : p.nu) v = f.from_int(d(rng));
    // Generic means the s part and the y part are both present.
    if (p.nu[4].is_zero() || (p.nu[0].is_zero() && p.nu[1].is_zero() && p.nu[2].is_zero() &&
                              p.nu[3].is_zero())) {
      continue;
    }
    ++draws;
    auto q = unproj::build_q(f, p);
    for (Word w = 0; w < 64; ++w) {
      Poly<Zp> img = alg::convert(action(w).map, f)(q);
      bool pm = img == q || img == -q;
      if (hs.count(w)) {
        r.expect(pm, word_string(w) + " in H does not preserve q up to sign");
      } else {
        r.expect(!pm, word_string(w) + " outside H preserves q");
      }
    }
  }
  r.params["prime"] = 13;
  r.params["seed"] = seed;
  r.witness["draws"] = draws;
  sw.stamp(r);
  return r;
}

CheckReport check_degenerate_delta() {
  Stopwatch sw;
  CheckReport r;
  r.id = "group.degenerate_delta";
  auto deltas = degenerate_delta_multiples();
  Json js = Json::array();
  for (long long m : deltas) js.push_back(std::to_string(m) + "*i");
  r.witness["delta"] = js;
  r.expect(!deltas.empty(), "the (-,+) locus never meets V");
  for (long long m : deltas) r.expect(m != 0, "delta = 0 found");
  sw.stamp(r);
  return r;
}

}  // namespace upv::grouprep
