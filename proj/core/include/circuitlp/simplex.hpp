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

#ifndef CIRCUITLP_SIMPLEX_HPP_
#define CIRCUITLP_SIMPLEX_HPP_

#include <optional>

#include "circuitlp/index_set.hpp"
#include "circuitlp/lp_instance.hpp"
#include "circuitlp/matrix.hpp"

namespace circuitlp {

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

const char* to_string(LpStatus status);

// Result of the reference simplex. For kOptimal: A x = b, x >= 0, and the
// dual (y, s) satisfies s = c - A^T y >= 0 with <s, x> = 0; `basis` indexes
// the basic columns (one per linearly independent row).
struct SimplexOutcome {
  LpStatus status = LpStatus::kInfeasible;
  std::optional<Vector> x;
  std::optional<Vector> y;
  std::optional<Vector> s;
  std::optional<IndexSet> basis;
  Rational objective = 0;
};

// Textbook two-phase tableau simplex with Bland's rule in exact arithmetic.
// Accepts any A (dependent rows are detected in phase one and dropped; their
// dual entries are zero).
SimplexOutcome simplex_solve(const Matrix& a, const Vector& b, const Vector& c);

// Standard or capacitated instance; bounds go through the [A 0; I I]
// reformulation. For capacitated instances only x and the objective are
// reported.
SimplexOutcome simplex_solve(const LpInstance& inst);

}  // namespace circuitlp

#endif  // CIRCUITLP_SIMPLEX_HPP_
