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


#include <gtest/gtest.h>

#include "../support/reference.hpp"
#include "circuitlp/circuits.hpp"
#include "circuitlp/error.hpp"
#include "circuitlp/generators.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/walks.hpp"

namespace circuitlp {
namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

TEST(DiameterWalk, SingleStep) {
  Matrix a{{1, 1}};
  auto t = diameter_walk(a, {q(1)}, IndexSet{0}, {q(0), q(1)}, q(1));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].direction.g, (Vector{q(1), q(-1)}));
  EXPECT_EQ(t.steps[0].step, q(1));
  EXPECT_TRUE(t.reached_target);
  EXPECT_TRUE(check_trace_lemmas(t, q(1)).ok());
}

TEST(DiameterWalk, AlreadyAtTarget) {
  Matrix a{{1, 1}};
  auto t = diameter_walk(a, {q(1)}, IndexSet{0}, {q(1), q(0)}, q(1));
  EXPECT_TRUE(t.steps.empty());
  EXPECT_TRUE(t.reached_target);
  EXPECT_TRUE(check_trace_lemmas(t, q(1)).ok());
}

TEST(DiameterWalk, InfeasibleStart) {
  try {
    diameter_walk(Matrix{{1, 1}}, {q(1)}, IndexSet{0}, {q(2), q(0)}, q(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleStart);
  }
}

void expect_clean_walk(const GeneratedInstance& g) {
  const auto& inst = g.instance;
  Rational kappa = kappa_exact(inst.a).value;
  auto t = diameter_walk(inst.a, inst.b, g.target_basis, g.start, kappa);
  EXPECT_TRUE(t.reached_target);
  EXPECT_EQ(t.iterate(t.steps.size()), g.target);
  auto report = check_trace_lemmas(t, kappa);
  EXPECT_TRUE(report.ok()) << report.first()->check << ": "
                           << report.first()->detail;
  EXPECT_LE(t.steps.size(), default_walk_cap(inst.m(), inst.n(), kappa));
  for (std::size_t s = 0; s < t.steps.size(); ++s) {
    EXPECT_TRUE(is_feasible(inst.a, inst.b, t.iterate(s + 1)));
    EXPECT_TRUE(reference::is_circuit(inst.a, t.steps[s].direction.circuit));
  }
}

TEST(DiameterWalk, TotallyUnimodularInstances) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = generate_instance(InstanceKind::kTotallyUnimodular, 8, 3, seed);
    SCOPED_TRACE(seed);
    expect_clean_walk(g);
  }
}

TEST(DiameterWalk, GenericInstances) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto g = generate_instance(InstanceKind::kGeneric, 7, 3, seed);
    SCOPED_TRACE(seed);
    expect_clean_walk(g);
  }
}

TEST(TraceLemmas, EmptyTraceIsClean) {
  WalkTrace t;
  t.a = Matrix{{1, 1}};
  t.b = {q(1)};
  t.start = {q(1), q(0)};
  t.target = t.start;
  t.nonbasic = IndexSet{1};
  t.sets.push_back(analysis_sets(t.start, t.target, t.nonbasic, 2, 1, q(1)));
  t.reached_target = true;
  EXPECT_TRUE(check_trace_lemmas(t, q(1)).ok());
}

TEST(TraceLemmas, DetectsBrokenLinkage) {
  Matrix a{{1, 1}};
  auto t = diameter_walk(a, {q(1)}, IndexSet{0}, {q(0), q(1)}, q(1));
  ASSERT_EQ(t.steps.size(), 1u);
  t.steps[0].step = q(1, 2);
  auto report = check_trace_lemmas(t, q(1));
  EXPECT_FALSE(report.ok());
  EXPECT_GT(report.structural_violations(), 0u);
}

TEST(TraceLemmas, UnderestimatedKappaOnlyYieldsDiagnostics) {
  // kappa of [1 2 3] is 3; checking with 1 may flag estimate-dependent sets
  // but never the structural lemmas.
  Matrix a{{1, 2, 3}};
  Rational kappa = kappa_exact(a).value;
  ASSERT_GT(kappa, 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    Vector b{q(1 + static_cast<long>(rng() % 30))};
    const Index from = rng() % 3;
    const Index to = (from + 1 + rng() % 2) % 3;
    Vector x0 = basic_solution(a, b, IndexSet{from});
    auto t = diameter_walk(a, b, IndexSet{to}, x0, q(1));
    EXPECT_TRUE(t.reached_target);
    auto report = check_trace_lemmas(t, q(1));
    EXPECT_EQ(report.structural_violations(), 0u);
    for (const auto& v : report.violations) EXPECT_TRUE(v.kappa_dependent);
  }
}

TEST(AnalysisSets, Definitions) {
  Vector x{q(1), q(2), q(0)};
  Vector target{q(3), q(0), q(0)};
  auto s = analysis_sets(x, target, IndexSet{1, 2}, 3, 1, q(1));
  // ||x_N||_1 = 2, threshold n kappa 2 = 6: nothing is large.
  EXPECT_TRUE(s.large.empty());
  EXPECT_EQ(s.rest, (IndexSet{0, 1, 2}));
  // x_i <= (n - m) x*_i: 1 <= 6, 2 <= 0 fails, 0 <= 0.
  EXPECT_EQ(s.reached, (IndexSet{0, 2}));
}

TEST(CapacitatedWalk, StartAtTarget) {
  auto g = generate_instance(InstanceKind::kCapacitated, 6, 2, 3);
  ASSERT_TRUE(g.partition.has_value());
  Vector target = partition_vertex(g.instance.a, g.instance.b, *g.instance.u,
                                   *g.partition);
  auto t = capacitated_walk(g.instance.a, g.instance.b, *g.instance.u,
                            *g.partition, target, q(1));
  EXPECT_TRUE(t.walk.steps.empty());
  EXPECT_TRUE(t.walk.reached_target);
}

TEST(CapacitatedWalk, RandomInstancesEndAtTarget) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    SCOPED_TRACE(seed);
    auto g = generate_instance(InstanceKind::kCapacitated, 7, 2, seed);
    const auto& inst = g.instance;
    Rational kappa = kappa_exact(inst.a).value;
    auto t = capacitated_walk(inst.a, inst.b, *inst.u, *g.partition, g.start,
                              kappa);
    EXPECT_TRUE(t.walk.reached_target);
    EXPECT_EQ(t.walk.iterate(t.walk.steps.size()), g.target);
    EXPECT_LE(t.final_unsettled.size(), inst.m());
    EXPECT_LE(t.support_calls, inst.n());
    auto report = check_capacitated_trace(t, *g.partition);
    for (const auto& v : report.violations) {
      ADD_FAILURE() << v.check << " at " << v.iteration << ": " << v.detail;
    }
    for (std::size_t s = 0; s < t.walk.steps.size(); ++s) {
      EXPECT_TRUE(is_feasible(inst.a, inst.b, t.walk.iterate(s + 1), inst.u));
    }
  }
}

TEST(Generators, Deterministic) {
  auto a = generate_instance(InstanceKind::kGeneric, 6, 2, 99);
  auto b = generate_instance(InstanceKind::kGeneric, 6, 2, 99);
  EXPECT_EQ(a.instance, b.instance);
  EXPECT_EQ(a.start, b.start);
  EXPECT_EQ(a.target_basis, b.target_basis);
}

TEST(Generators, GenericValidity) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = generate_instance(InstanceKind::kGeneric, 5, 2, seed);
    EXPECT_EQ(reference::rank(g.instance.a), 2u);
    EXPECT_TRUE(is_feasible(g.instance.a, g.instance.b, g.start));
    EXPECT_TRUE(is_feasible(g.instance.a, g.instance.b, g.target));
    EXPECT_NE(g.start, g.target);
    EXPECT_EQ(basic_solution(g.instance.a, g.instance.b, g.target_basis),
              g.target);
    for (std::size_t i = 0; i < g.instance.m(); ++i) {
      for (std::size_t j = 0; j < g.instance.n(); ++j) {
        EXPECT_LE(abs(g.instance.a(i, j)), 5);
      }
    }
  }
}

TEST(Generators, TotallyUnimodularKappa) {
  auto g = generate_instance(InstanceKind::kTotallyUnimodular, 6, 3, 1);
  EXPECT_EQ(kappa_exact(g.instance.a).value, q(1));
}

TEST(Generators, KindNames) {
  EXPECT_EQ(parse_instance_kind("tu"), InstanceKind::kTotallyUnimodular);
  EXPECT_EQ(parse_instance_kind("generic"), InstanceKind::kGeneric);
  EXPECT_EQ(parse_instance_kind("cap"), InstanceKind::kCapacitated);
  EXPECT_FALSE(parse_instance_kind("other").has_value());
}

}  // namespace
}  // namespace circuitlp
