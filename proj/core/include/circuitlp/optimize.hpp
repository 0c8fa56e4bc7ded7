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

#ifndef CIRCUITLP_OPTIMIZE_HPP_
#define CIRCUITLP_OPTIMIZE_HPP_

#include <optional>
#include <vector>

#include "circuitlp/feasibility.hpp"
#include "circuitlp/simplex.hpp"
#include "circuitlp/variable_fixing.hpp"

namespace circuitlp {

// A variable-fixing round expressed in the original coordinates.
struct FixingRound {
  IndexSet columns;       // columns still free when the round started
  SolverParams params;    // for the reduced system of this round
  FixingOutcome outcome;  // in the coordinates of `columns`
  IndexSet fixed;         // outcome.fixed mapped back to [n]
};

struct OptimizeResult {
  LpStatus status = LpStatus::kOptimal;  // kOptimal or kUnbounded
  Vector x;
  Rational objective;
  std::optional<Vector> ray;  // A z = 0, z >= 0, <c, z> < 0 when unbounded
  std::vector<FixingRound> rounds;
  std::vector<SolverStep> steps;  // all augmentations, in [n] coordinates
  CallCounts calls;
};

// Ray z >= 0 in ker(A) with <c, z> < 0, if LP(c) is unbounded.
std::optional<Vector> unbounded_ray(const Matrix& a, const Vector& c);

// Circuit-augmentation optimization from a feasible x0 with a fixed
// estimate. Throws kEmptyN, kIterationCap or kAssertionFailed when the
// estimate is too small.
OptimizeResult optimize(const Matrix& a, const Vector& b, const Vector& c,
                        const Vector& x0, const Rational& kappa_hat,
                        CallCounts* counts = nullptr);

struct OptimizeRun {
  OptimizeResult result;
  Rational kappa_hat;
  std::vector<EstimateAttempt> attempts;
};

// optimize() under the squaring estimate schedule starting at `start`
// (defaults to n).
OptimizeRun optimize_auto(const Matrix& a, const Vector& b, const Vector& c,
                          const Vector& x0,
                          std::optional<Rational> start = std::nullopt,
                          const DoublingOptions& options = {});

struct SolveResult {
  LpStatus status = LpStatus::kOptimal;
  std::optional<Vector> x;
  std::optional<Rational> objective;
  std::optional<DualCertificate> infeasibility;  // A^T y >= 0, <b, y> < 0
  std::optional<Vector> ray;
  std::optional<PhaseOneResult> phase_one;
  std::optional<OptimizeRun> phase_two;
};

// Phase one through the auxiliary program unless `start` is given, then
// optimize_auto. Capacitated instances are solved in the [A 0; I I] form.
SolveResult solve(const LpInstance& inst,
                  const std::optional<Vector>& start = std::nullopt);

}  // namespace circuitlp

#endif  // CIRCUITLP_OPTIMIZE_HPP_
