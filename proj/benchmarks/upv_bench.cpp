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


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "upv/cover/cover.hpp"
#include "upv/cover/enumerate.hpp"
#include "upv/exactalg/linalg.hpp"
#include "upv/invariants/invariants.hpp"
#include "upv/unproj/checks.hpp"
#include "upv/unproj/ideals.hpp"

namespace {

using upv::alg::PrimeField;

void BM_EnumerateSurface(benchmark::State& state) {
  PrimeField f(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937_64 rng(1);
  auto p = upv::cover::draw_params(f, rng);
  std::size_t n = 0;
  for (auto _ : state) {
    auto s = upv::cover::enumerate_surface(f, p, static_cast<unsigned>(state.range(1)));
    n = s.points.size();
    benchmark::DoNotOptimize(n);
  }
  state.counters["points"] = static_cast<double>(n);
}
BENCHMARK(BM_EnumerateSurface)->Args({13, 1})->Args({29, 1})->Args({29, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_HilbertT(benchmark::State& state) {
  PrimeField f(13);
  std::mt19937_64 rng(2);
  auto p = upv::cover::draw_params(f, rng);
  for (auto _ : state) {
    auto h = upv::invariants::hilbert_t(13, p, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(h.h.back());
  }
}
BENCHMARK(BM_HilbertT)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_HilbertX(benchmark::State& state) {
  for (auto _ : state) {
    auto h = upv::invariants::hilbert_x(13, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(h.h.back());
  }
}
BENCHMARK(BM_HilbertX)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ModPRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::uint32_t p = 2147483629u;
  std::mt19937 rng(3);
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (auto& r : rows)
    for (auto& v : r) v = rng() % p;
  for (auto _ : state) {
    upv::alg::ModPEchelon e(n, p);
    for (const auto& r : rows) e.add_row(r);
    benchmark::DoNotOptimize(e.rank());
  }
}
BENCHMARK(BM_ModPRank)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_JacobianDeterminant(benchmark::State& state) {
  auto block = upv::unproj::jacobian_block({0, 0, 0, 0});
  for (auto _ : state) {
    auto d = upv::alg::determinant(block, upv::alg::Rational(1));
    benchmark::DoNotOptimize(d.size());
  }
}
BENCHMARK(BM_JacobianDeterminant)->Unit(benchmark::kMillisecond);

void BM_LiftedGroupClosure(benchmark::State& state) {
  PrimeField f(13);
  for (auto _ : state) {
    auto g = upv::cover::lifted_group(f);
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_LiftedGroupClosure)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
