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

#ifndef CIRCUITLP_FEASIBILITY_HPP_
#define CIRCUITLP_FEASIBILITY_HPP_

#include <optional>
#include <vector>

#include "circuitlp/kappa_doubling.hpp"
#include "circuitlp/lp_instance.hpp"
#include "circuitlp/oracles.hpp"
#include "circuitlp/params.hpp"
#include "circuitlp/solver_step.hpp"

namespace circuitlp {

// min <1, z>  s.t.  A y - A z = b,  y, z >= 0.
struct AuxLp {
  Matrix a;          // [A  -A]
  Vector b;
  Vector c;          // (0_n, 1_n)
  IndexSet zero_set; // the z block
  Vector start;      // (x^+, x^-) for some x with A x = b
};

// Throws kNoLinearSolution when A x = b has no solution.
AuxLp build_aux_lp(const Matrix& a, const Vector& b);

struct FeasibilityResult {
  std::optional<Vector> x;  // feasible with x_N = 0
  // Otherwise: s = c + A^T y >= 0 with -<b, y> > 0, so every feasible x has
  // <c, x> > 0.
  std::optional<DualCertificate> certificate;
  CallCounts calls;
  std::vector<SolverStep> steps;

  bool found() const { return x.has_value(); }
};

// Cost 1 on N and 0 elsewhere; finds x in P with x_N = 0 or a dual
// certificate that none exists. Throws kInfeasibleStart, and kIterationCap
// when a budget of `params` is exceeded (the estimate is too small).
FeasibilityResult feasibility(const Matrix& a, const Vector& b,
                              const IndexSet& zero_set, const Vector& x0,
                              const SolverParams& params,
                              CallCounts* counts = nullptr);

struct FeasibilityRun {
  FeasibilityResult result;
  Rational kappa_hat;
  std::vector<EstimateAttempt> attempts;
};

// feasibility() under the squaring estimate schedule, starting at n.
FeasibilityRun feasibility_auto(const Matrix& a, const Vector& b,
                                const IndexSet& zero_set, const Vector& x0,
                                const DoublingOptions& options = {});

// Phase one: a point of {A x = b, x >= 0}, or a certificate y with
// A^T y >= 0 and <b, y> < 0.
struct PhaseOneResult {
  std::optional<Vector> x;
  std::optional<DualCertificate> certificate;
  FeasibilityRun run;
};

PhaseOneResult find_feasible_point(const Matrix& a, const Vector& b,
                                   const DoublingOptions& options = {});

}  // namespace circuitlp

#endif  // CIRCUITLP_FEASIBILITY_HPP_
