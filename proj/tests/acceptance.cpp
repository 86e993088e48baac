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


// Acceptance run: one line per criterion with its outcome, wall time and
// budget. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "upv/bicanon/bicanon.hpp"
#include "upv/bicanon/burniat.hpp"
#include "upv/cover/cover.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/invariants/invariants.hpp"
#include "upv/unproj/checks.hpp"

namespace {

using upv::CheckReport;
using upv::Json;

const std::vector<std::uint64_t> kPrimes{13, 17, 29};
constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool ok = true;
  std::string note;

  void need(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    }
  }
  void need(const CheckReport& r) {
    std::string why = r.id;
    if (r.witness.contains("failures") && !r.witness["failures"].empty()) {
      why += ": " + r.witness["failures"][0].get<std::string>();
    }
    need(r.passed(), why);
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

std::vector<Criterion> criteria() {
  return {
      {1, "census 63, sigma# kills J, Z1 and Z2", 5,
       [](Outcome& o) {
         auto c = upv::unproj::check_census();
         o.need(c);
         o.need(c.witness["quadrics"] == 3 && c.witness["cubics"] == 32 && c.witness["quartics"] == 28 &&
                    c.witness["total"] == 63,
                "census counts");
         o.need(upv::unproj::check_master_pullback());
         o.need(upv::cover::check_sigma());
         o.need(upv::cover::check_z2());
       }},
      {2, "24 rank-6 and 4 rank-8 plane pairs", 1,
       [](Outcome& o) {
         auto r = upv::unproj::check_plane_incidences();
         o.need(r);
         o.need(r.witness["lines"] == 24 && r.witness["empty"] == 4, "plane pair counts");
       }},
      {3, "8 Jacobian minors equal +-y^11", 30,
       [](Outcome& o) {
         auto r = upv::unproj::check_jacobian_minor();
         o.need(r);
         o.need(r.witness["determinants"].size() == 8, "eight minors");
       }},
      {4, "lifted group is Z/2 x Q8, lifts and relations", 1,
       [](Outcome& o) {
         auto g = upv::cover::check_group_certification();
         o.need(g);
         o.need(g.witness["order"] == 16, "group order");
         o.need(g.witness["order_histogram"] == Json{{"1", 1}, {"2", 3}, {"4", 12}}, "order histogram");
         o.need(upv::cover::check_lifts());
       }},
      {5, "free action and smoothness over {13, 17, 29} x 5 nu", 60,
       [](Outcome& o) {
         auto r = upv::cover::check_free_action(kPrimes, kSeed, 5);
         o.need(r);
         std::size_t accepted = 0;
         for (const auto& run : r.witness["runs"]) accepted += run["status"] == "pass";
         o.need(accepted == 15, "expected 15 smooth free members");
       }},
      {6, "h_T = 7, 32, 80, 152 and h_X equals the CI series for d <= 6", 120,
       [](Outcome& o) {
         auto t = upv::invariants::check_hilbert_t(kPrimes, kSeed, 4);
         o.need(t);
         for (const auto& p : t.witness["profiles"]) {
           o.need(p["h"] == Json{1, 7, 32, 80, 152}, "h_T profile");
         }
         auto x = upv::invariants::check_hilbert_x(kPrimes, 6);
         o.need(x);
         auto series = upv::invariants::complete_intersection_series(6);
         for (const auto& p : x.witness["profiles"]) o.need(p["h"] == Json(series), "h_X profile");
       }},
      {7, "intersection numbers 24, 12, 12, 24", 1,
       [](Outcome& o) {
         auto r = upv::invariants::check_intersection();
         o.need(r);
         const auto& w = r.witness;
         o.need(w["H^4"] == 24 && w["deg_Y"] == 12 && w["minus_K_V_cubed"] == 12 && w["K_T_squared"] == 24,
                "intersection numbers");
       }},
      {8, "S3 for 20 nu x 3 primes, point images, nodes, plane sections", 30,
       [](Outcome& o) {
         auto s = upv::bicanon::check_s3_cubic(kPrimes, kSeed, 20);
         o.need(s);
         o.need(s.witness["identities"] == 60, "60 squaring identities");
         o.need(upv::bicanon::check_point_images(kPrimes, kSeed));
         o.need(upv::bicanon::check_nodes(kPrimes, kSeed));
         o.need(upv::bicanon::check_plane_sections(kPrimes, kSeed));
       }},
      {9, "branch loci for 24 theta words x 3 nu at q = 13", 30,
       [](Outcome& o) {
         auto r = upv::bicanon::check_branch_loci(13, kSeed, 3);
         o.need(r);
         o.need(r.witness["runs"].size() == 3, "three nu draws");
         for (const auto& run : r.witness["runs"]) o.need(run["fixed"].size() == 24, "24 theta words");
       }},
      {10, "Burniat: 24 nodes, F3 partials, lambda identity, parameter map", 30,
       [](Outcome& o) {
         auto n = upv::bicanon::check_burniat_nodes();
         o.need(n);
         o.need(n.witness["nodes"] == 24, "24 nodes");
         o.need(upv::bicanon::check_f3());
         o.need(upv::bicanon::check_lambda_identity());
         auto p = upv::bicanon::check_parameter_map(upv::alg::Rational(-4));
         o.need(p);
         o.need(p.witness["nu4_squared"] == "9/16", "nu4^2 at lambda = -4");
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.need(secs <= c.budget_s, "over the time budget");
    failed += !o.ok;
    std::printf("criterion %2d %s  %-62s %7.2fs / %gs%s%s\n", c.number, o.ok ? "PASS" : "FAIL", c.title.c_str(),
                secs, c.budget_s, o.ok ? "" : "  ", o.note.c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed ? 1 : 0;
}
