// Copyright 2026 The circuitlp Authors.
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

#include "circuitlp/circuits.hpp"
#include "circuitlp/feasibility.hpp"
#include "circuitlp/generators.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/optimize.hpp"
#include "circuitlp/oracles.hpp"
#include "circuitlp/simplex.hpp"
#include "circuitlp/walks.hpp"

namespace circuitlp {
namespace {

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  Matrix a = random_matrix(rng, n / 2, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

void BM_KappaExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  Matrix a = random_matrix(rng, 3, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(kappa_exact(a).value);
}
BENCHMARK(BM_KappaExact)->Arg(6)->Arg(8)->Arg(10);

void BM_RatioCircuit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  Matrix a = random_matrix(rng, n / 3, n, 5);
  Vector c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<long>(i % 7);
  Vector x = ones(n);
  Weights w = inverse_weights(x);
  for (auto _ : state) benchmark::DoNotOptimize(ratio_circuit(a, c, w).status);
}
BENCHMARK(BM_RatioCircuit)->Arg(6)->Arg(12)->Arg(24);

void BM_Simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto lp = generate_solvable_lp(n, n / 3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplex_solve(lp.instance).objective);
  }
}
BENCHMARK(BM_Simplex)->Arg(6)->Arg(9)->Arg(12);

void BM_DiameterWalk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = generate_instance(InstanceKind::kTotallyUnimodular, n, n / 3, 5);
  for (auto _ : state) {
    auto t = diameter_walk(g.instance.a, g.instance.b, g.target_basis, g.start,
                           Rational(1));
    benchmark::DoNotOptimize(t.steps.size());
  }
}
BENCHMARK(BM_DiameterWalk)->Arg(6)->Arg(9)->Arg(12);

void BM_Feasibility(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto inst = generate_feasibility_instance(n, 2, true, 6);
  for (auto _ : state) {
    auto run = feasibility_auto(inst.a, inst.b, inst.zero_set, inst.start);
    benchmark::DoNotOptimize(run.result.found());
  }
}
BENCHMARK(BM_Feasibility)->Arg(6)->Arg(8);

void BM_Optimize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto lp = generate_solvable_lp(n, 2, 7);
  const auto& inst = lp.instance;
  for (auto _ : state) {
    auto run = optimize_auto(inst.a, inst.b, inst.c, lp.start);
    benchmark::DoNotOptimize(run.result.objective);
  }
}
BENCHMARK(BM_Optimize)->Arg(5)->Arg(8);

}  // namespace
}  // namespace circuitlp

BENCHMARK_MAIN();
