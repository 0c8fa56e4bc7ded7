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
#include "circuitlp/error.hpp"
#include "circuitlp/generators.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/oracles.hpp"
#include "circuitlp/simplex.hpp"

namespace circuitlp {
namespace {

Rational q(long p, long r = 1) { return make_rational(p, r); }

Vector random_vector(Rng& rng, std::size_t n, long lo, long hi) {
  Vector v(n);
  for (auto& x : v) x = lo + static_cast<long>(rng() % (hi - lo + 1));
  return v;
}

TEST(SupportCircuit, PicksNonpositiveCircuitThroughTarget) {
  Matrix a{{1, 1, 1}};
  Vector c{q(0), q(0), q(1)};
  auto z = support_circuit(a, c, {q(1), q(1), q(1)}, IndexSet{2});
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(z->circuit.contains(2));
  EXPECT_EQ(dot(c, z->g), q(-1));
  EXPECT_TRUE(is_elementary(a, z->g));
}

TEST(SupportCircuit, NoneInsideSingleColumn) {
  Matrix a{{1, 1, 1}};
  EXPECT_FALSE(support_circuit(a, {q(1), q(1), q(1)}, {q(1), q(0), q(0)},
                               IndexSet{0, 1, 2})
                   .has_value());
}

TEST(SupportCircuit, UniqueCircuit) {
  Matrix a{{1, 0, 1}, {0, 1, 1}};
  Vector c{q(1), q(2), q(3)};
  auto z = support_circuit(a, c, {q(1), q(1), q(1)}, IndexSet{0});
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(reference::normalize(z->g), (Vector{q(1), q(1), q(-1)}));
  EXPECT_LE(dot(c, z->g), 0);
}

TEST(SupportCircuit, RandomProperties) {
  Rng rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    Matrix a = random_matrix(rng, 2, n, 3);
    Vector x = random_vector(rng, n, 0, 2);
    Vector c = random_vector(rng, n, -3, 3);
    IndexSet s{static_cast<Index>(rng() % n)};
    auto z = support_circuit(a, c, x, s);
    bool exists = false;
    for (const Vector& g : reference::elementary_vectors(a)) {
      if (support(g).is_subset_of(support(x)) && !support(g).intersect(s).empty()) {
        exists = true;
      }
    }
    ASSERT_EQ(z.has_value(), exists);
    if (!z) continue;
    EXPECT_TRUE(is_elementary(a, z->g));
    EXPECT_TRUE(z->circuit.is_subset_of(support(x)));
    EXPECT_FALSE(z->circuit.intersect(s).empty());
    EXPECT_LE(dot(c, z->g), 0);
  }
}

TEST(RatioCircuit, HandExample) {
  Matrix a{{1, 1}};
  Vector c{q(1), q(0)};
  auto r = ratio_circuit(a, c, unit_weights(2));
  ASSERT_EQ(r.status, RatioStatus::kCircuit);
  EXPECT_EQ(r.g->g, (Vector{q(-1), q(1)}));
  EXPECT_EQ(r.dual.lambda, q(1));
  EXPECT_EQ(r.dual.y, (Vector{q(0)}));
  EXPECT_EQ(r.dual.s, (Vector{q(1), q(0)}));
  EXPECT_TRUE(is_valid_dual(a, c, unit_weights(2), r.dual));
}

TEST(RatioCircuit, ZeroWhenCostInRowSpace) {
  Matrix a{{1, 2, 3}};
  auto r = ratio_circuit(a, {q(2), q(4), q(6)}, unit_weights(3));
  EXPECT_EQ(r.status, RatioStatus::kZero);
  EXPECT_EQ(r.dual.lambda, q(0));
}

TEST(RatioCircuit, UnboundedRay) {
  Matrix a{{1, -1}};
  try {
    ratio_circuit(a, {q(-1), q(0)}, unit_weights(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnboundedRatioLP);
  }
}

TEST(RatioCircuit, MatchesBruteForceAndDuality) {
  Rng rng(41);
  int checked = 0;
  while (checked < 80) {
    const std::size_t n = 3 + rng() % 4;
    const std::size_t m = 1 + rng() % (n - 2);
    Matrix a = random_matrix(rng, m, n, 3);
    Vector c = random_vector(rng, n, -4, 4);
    Weights w;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 5 == 0) {
        w.push_back(ExtendedRational::infinity());
      } else {
        w.emplace_back(make_rational(1 + static_cast<long>(rng() % 6),
                                     1 + static_cast<long>(rng() % 3)));
      }
    }
    auto best = reference::min_ratio(a, c, w);
    if (!best) {
      EXPECT_THROW(ratio_circuit(a, c, w), Error);
      continue;
    }
    ++checked;
    auto r = ratio_circuit(a, c, w);
    EXPECT_TRUE(is_valid_dual(a, c, w, r.dual));
    if (r.status == RatioStatus::kZero) {
      EXPECT_EQ(*best, 0);
      EXPECT_EQ(r.dual.lambda, 0);
      continue;
    }
    const Vector& g = r.g->g;
    EXPECT_TRUE(is_elementary(a, g));
    EXPECT_EQ(weighted_negative_part(w, g), 1);
    EXPECT_EQ(dot(c, g), *best);
    EXPECT_EQ(dot(c, g), -r.dual.lambda);
  }
}

TEST(RatioCircuit, DualIsFeasibleForLpDual) {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_matrix(rng, 2, 5, 3);
    Vector c = random_vector(rng, 5, 0, 5);
    auto r = ratio_circuit(a, c, unit_weights(5));
    EXPECT_TRUE(is_nonnegative(r.dual.s));
    EXPECT_EQ(r.dual.s, c + a.transpose() * r.dual.y);
  }
}

TEST(Augment, SingleBindingRatio) {
  Matrix a{{1, 1, 1}};
  auto r = augment_maximal(a, {q(1), q(1), q(1)}, {q(0), q(1), q(-1)});
  EXPECT_EQ(r.x, (Vector{q(1), q(2), q(0)}));
  EXPECT_EQ(*r.step, q(1));
}

TEST(Augment, UnboundedWithoutCaps) {
  Matrix a{{1, -1}};
  auto r = augment_maximal(a, {q(1), q(1)}, {q(1), q(1)});
  EXPECT_TRUE(r.unbounded());
  EXPECT_EQ(r.x, (Vector{q(1), q(1)}));
}

TEST(Augment, CapacitatedBothBind) {
  Matrix a{{1, 1, 1}};
  Bounds u{ExtendedRational(q(2)), ExtendedRational(q(2)), ExtendedRational(q(2))};
  auto r = augment_maximal(a, {q(1), q(1), q(1)}, {q(0), q(1), q(-1)}, u);
  EXPECT_EQ(*r.step, q(1));
  EXPECT_EQ(r.x, (Vector{q(1), q(2), q(0)}));
}

TEST(Augment, ZeroDirection) {
  try {
    augment_maximal(Matrix{{1, 1}}, {q(1), q(0)}, {q(0), q(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDirection);
  }
}

TEST(Augment, MaximalityOnRandomSteps) {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix a = random_matrix(rng, 2, 5, 3);
    auto es = reference::elementary_vectors(a);
    if (es.empty()) continue;
    Vector g = es[rng() % es.size()];
    Vector x = random_vector(rng, 5, 1, 4);
    auto r = augment_maximal(a, x, g);
    if (r.unbounded()) {
      EXPECT_TRUE(is_nonnegative(g));
      continue;
    }
    EXPECT_TRUE(is_nonnegative(r.x));
    EXPECT_EQ(r.x, x + *r.step * g);
    bool binds = false;
    for (std::size_t i = 0; i < 5; ++i) {
      if (r.x[i] == 0 && g[i] < 0) binds = true;
    }
    EXPECT_TRUE(binds);
  }
}

TEST(Simplex, Examples) {
  auto o = simplex_solve(Matrix{{1, 1}}, {q(1)}, {q(1), q(0)});
  ASSERT_EQ(o.status, LpStatus::kOptimal);
  EXPECT_EQ(*o.x, (Vector{q(0), q(1)}));
  EXPECT_EQ(o.objective, 0);
  EXPECT_EQ(simplex_solve(Matrix{{0}}, {q(0)}, {q(-1)}).status,
            LpStatus::kUnbounded);
  EXPECT_EQ(simplex_solve(Matrix{{1, 1}}, {q(-1)}, {q(0), q(0)}).status,
            LpStatus::kInfeasible);
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  Rng rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const std::size_t m = 1 + rng() % 3;
    Matrix a = random_matrix(rng, m, n, 3);
    Vector b = random_vector(rng, m, -3, 5);
    Vector c = random_vector(rng, n, -3, 5);
    auto o = simplex_solve(a, b, c);
    auto ref = reference::solve_lp(a, b, c);
    switch (ref.kind) {
      case reference::LpKind::kInfeasible:
        EXPECT_EQ(o.status, LpStatus::kInfeasible);
        break;
      case reference::LpKind::kUnbounded:
        EXPECT_EQ(o.status, LpStatus::kUnbounded);
        break;
      case reference::LpKind::kOptimal: {
        ASSERT_EQ(o.status, LpStatus::kOptimal);
        EXPECT_EQ(o.objective, ref.value);
        EXPECT_EQ(a * *o.x, b);
        EXPECT_TRUE(is_nonnegative(*o.x));
        EXPECT_TRUE(is_nonnegative(*o.s));
        EXPECT_EQ(dot(*o.s, *o.x), 0);
        break;
      }
    }
  }
}

TEST(Weights, InverseAndNegativePart) {
  Weights w = inverse_weights({q(2), q(0), q(1, 3)});
  EXPECT_EQ(w[0], ExtendedRational(q(1, 2)));
  EXPECT_TRUE(w[1].is_infinite());
  EXPECT_EQ(w[2], ExtendedRational(q(3)));
  EXPECT_EQ(weighted_negative_part(w, {q(-2), q(5), q(-1)}), q(4));
}

}  // namespace
}  // namespace circuitlp
