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


#include "upv/suite/registry.hpp"

#include "upv/bicanon/bicanon.hpp"
#include "upv/bicanon/burniat.hpp"
#include "upv/cover/cover.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/grouprep/grouprep.hpp"
#include "upv/invariants/invariants.hpp"
#include "upv/unproj/checks.hpp"

namespace upv::suite {

namespace {

using Fn = std::function<CheckReport(const RunConfig&)>;

template <class F>
Fn fixed(F f) {
  return [f](const RunConfig&) { return f(); };
}

std::vector<CheckSpec> build() {
  std::vector<CheckSpec> c;
  auto add = [&](std::string id, std::string desc, Fn fn, bool enumerates = false, bool alias = false) {
    c.push_back({std::move(id), std::move(desc), enumerates, alias, std::move(fn)});
  };
  // unproj
  add("unproj.x_ideal", "three quadrics of X, a complete intersection", fixed(unproj::check_x_ideal));
  add("unproj.census", "J has 3 + 32 + 28 = 63 generators", fixed(unproj::check_census));
  add("unproj.master_pullback", "sigma^# kills J, maps x00 + x01 to Z1 and 2q to Z2", fixed(unproj::check_master_pullback));
  add("unproj.phi_consistency", "the four expressions of each phi_abcd agree modulo X", fixed(unproj::check_phi_consistency));
  add("unproj.quartic_witness", "quartic relations are independent of the witness pair", fixed(unproj::check_quartic_witness));
  add("unproj.plane_incidences", "24 line pairs and 4 empty pairs among the planes", fixed(unproj::check_plane_incidences));
  add("unproj.jacobian_minor", "the 8 Jacobian minors are +-y^11", fixed(unproj::check_jacobian_minor));
  add("unproj.veronese_chart", "2x2 minors of the Veronese matrix lie in J", fixed(unproj::check_veronese_chart));
  add("unproj.elimination_cubic", "x00 q reduces to x00 l + nu4 prod (x_i0 + x_i1)", fixed(unproj::check_elimination_cubic));
  add("unproj.t_ideal", "T = V + (q) has 65 generators", fixed(unproj::check_t_ideal));
  // group
  add("group.generators", "generator actions preserve J", fixed(grouprep::check_generators));
  add("group.subgroups", "|G| = 8, |H| = 32, theta classes", fixed(grouprep::check_subgroups));
  add("group.regular_representation", "G acts on x by the regular representation", fixed(grouprep::check_regular_representation));
  add("group.fixed_loci", "linear fixed loci are eigen-conditions", fixed(grouprep::check_fixed_loci));
  add("group.ideal_invariance", "(Z/2)^6 preserves J and V", fixed(grouprep::check_ideal_invariance));
  add("group.q_invariance", "H preserves q up to sign", [](const RunConfig& g) { return grouprep::check_q_invariance(g.seed); });
  add("group.degenerate_delta", "delta = +-8i for the (-,+) fixed locus", fixed(grouprep::check_degenerate_delta));
  add("group.stabilizers", "G fixes no T-point; b1 b2 fixes points over L3",
      [](const RunConfig& g) { return bicanon::check_stabilizers(g.primes.front(), g.seed); }, true);
  // cover
  add("cover.sigma", "sigma, the deck involution, Z1 and point count", fixed(cover::check_sigma));
  add("cover.branch_structure", "sigma branches only at the 16 coordinate points", fixed(cover::check_branch_structure));
  add("cover.lifts", "lifts of the generators and their relations", fixed(cover::check_lifts));
  add("cover.group_certification", "the lifted group is Z/2 x Q8", fixed(cover::check_group_certification));
  add("cover.z2", "Z2 against 2 sigma^# q and its invariance", fixed(cover::check_z2));
  add("cover.enumeration", "threaded point enumeration and the point file",
      [](const RunConfig& g) { return cover::check_enumeration(g.seed); }, true);
  add("cover.free_action", "free action and smoothness over F_q",
      [](const RunConfig& g) { return cover::check_free_action(g.primes, g.seed); }, true);
  add("cover.orbit_closure", "the lifted group preserves the point sets",
      [](const RunConfig& g) { return cover::check_orbit_closure(g.primes, g.seed); }, true);
  add("cover.hplane_decomposition", "sigma-images on the coordinate hyperplanes",
      [](const RunConfig& g) { return cover::check_hplane_decomposition(g.primes.front()); }, true);
  // invariants
  add("invariants.hilbert_T", "h_T(d) = 1, 7, 32, 80, 152",
      [](const RunConfig& g) { return invariants::check_hilbert_t(g.primes, g.seed, g.max_degree); });
  add("invariants.hilbert_X", "h_X equals the complete-intersection series for d <= 6",
      [](const RunConfig& g) { return invariants::check_hilbert_x(g.primes, 6); });
  add("invariants.hilbert_Y", "h_Y is prime independent",
      [](const RunConfig& g) { return invariants::check_hilbert_y(g.primes, g.max_degree); });
  add("invariants.hilbert_V", "h_V(d) = h_Y(d) - h_Y(d-1)",
      [](const RunConfig& g) { return invariants::check_hilbert_v(g.primes, g.max_degree); });
  add("invariants.intersection", "deg Y = 12, -K_V^3 = 12, K_T^2 = 24", fixed(invariants::check_intersection));
  // bicanon
  add("bicanon.s3_cubic", "squaring derivation of the cubic S3",
      [](const RunConfig& g) { return bicanon::check_s3_cubic(g.primes, g.seed); });
  add("bicanon.point_images", "every T-point maps onto S3",
      [](const RunConfig& g) { return bicanon::check_point_images(g.primes, g.seed); }, true);
  add("bicanon.nodes", "the three nodes of S3",
      [](const RunConfig& g) { return bicanon::check_nodes(g.primes, g.seed); });
  add("bicanon.plane_sections", "s_i = -s0 cuts S3 in L_i + C_i",
      [](const RunConfig& g) { return bicanon::check_plane_sections(g.primes, g.seed); });
  add("bicanon.branch_loci", "fixed points of the theta classes lie over D_i and n_i",
      [](const RunConfig& g) { return bicanon::check_branch_loci(g.primes.front(), g.seed); }, true);
  add("bicanon.lambda_identity", "the plane-model identity in Q[lambda, u]",
      [](const RunConfig&) { return bicanon::check_lambda_identity("bicanon.lambda_identity"); }, false, true);
  // burniat
  add("burniat.nodes", "the 24 nodes are singular on F1 and F2", fixed(bicanon::check_burniat_nodes));
  add("burniat.charts", "the charts xi2 and zeta2 and the pencil generators", fixed(bicanon::check_charts));
  add("burniat.f3", "F3 partials have no common zero on x00 = 0", fixed(bicanon::check_f3));
  add("burniat.lambda_identity", "the plane-model identity in Q[lambda, u]",
      [](const RunConfig&) { return bicanon::check_lambda_identity(); });
  add("burniat.parameter_map", "nu4 normalization of the lambda -> nu map",
      [](const RunConfig& g) { return bicanon::check_parameter_map(alg::Rational::parse(g.lambda)); });
  add("burniat.singular_points", "pencil singularities are the preimages of the 24 nodes",
      [](const RunConfig& g) { return bicanon::check_singular_points(g.primes.front(), g.seed); }, true);
  return c;
}

std::string suite_of(const std::string& id) { return id.substr(0, id.find('.')); }

}  // namespace

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> r = build();
  return r;
}

const std::vector<std::string>& suites() {
  static const std::vector<std::string> s{"unproj", "group", "cover", "invariants", "bicanon", "burniat"};
  return s;
}

std::vector<const CheckSpec*> select(const std::string& name) {
  std::vector<const CheckSpec*> out;
  for (const auto& c : registry()) {
    if (c.id == name) return {&c};
  }
  for (const auto& c : registry()) {
    if (c.alias) continue;
    if (name == "all" || suite_of(c.id) == name) out.push_back(&c);
  }
  if (out.empty()) throw ConfigError("unknown check or suite '" + name + "'");
  return out;
}

CheckReport run_check(const CheckSpec& spec, const RunConfig& cfg) {
  Stopwatch sw;
  try {
    CheckReport r = spec.run(cfg);
    if (cfg.stable) r.time_ms = 0;
    return r;
  } catch (const std::exception& e) {
    CheckReport r;
    r.id = spec.id;
    r.fail(std::string("exception: ") + e.what());
    r.time_ms = cfg.stable ? 0 : sw.elapsed_ms();
    return r;
  }
}

}  // namespace upv::suite
