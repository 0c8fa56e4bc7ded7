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

#ifndef CIRCUITLP_VARIABLE_FIXING_HPP_
#define CIRCUITLP_VARIABLE_FIXING_HPP_

#include <vector>

#include "circuitlp/params.hpp"
#include "circuitlp/solver_step.hpp"

namespace circuitlp {

struct FixingPhase {
  std::size_t first_iteration = 0;
  Vector cost;          // c~ of the phase, nonnegative, entries 0 or >= delta
  Vector perturbation;  // r with c~ in Im(A^T) + c - r, 0 <= r <= k delta
  IndexSet large;       // L_t at the phase start
  std::size_t large_rank = 0;
  std::size_t ratio_calls = 0;
  std::size_t support_calls = 0;
};

struct FixingOutcome {
  Vector x;
  // Set when the projected cost vanishes: x is optimal and `fixed` is empty.
  bool optimal = false;
  IndexSet fixed;        // N: x_N = x*_N = 0 for every optimal x*
  Vector cost;           // c projected to ker(A) and scaled into [1, 2)
  Vector final_slack;    // s~ at termination
  std::vector<FixingPhase> phases;
  std::vector<SolverStep> steps;
  CallCounts calls;
};

// Proximity-based fixing: {j : s'_j > (m+1) kappa ||c - c'||_inf}.
IndexSet fixing_set(const Vector& c, const Vector& c_prime,
                    const Vector& s_prime, const Rational& kappa_hat,
                    std::size_t m);

// Some s'_j > (m+1) / (ceil_sqrt(n) (m+2)).
bool big_slack_exists(const Vector& c, const Vector& r, const Vector& s_prime,
                      std::size_t m, std::size_t n, const Rational& kappa_hat);

// One round of variable fixing from the feasible x0. Throws kEmptyN,
// kIterationCap and kAssertionFailed when the estimate is too small, and
// propagates kUnboundedRatioLP.
FixingOutcome variable_fixing(const Matrix& a, const Vector& b,
                              const Vector& c, const Vector& x0,
                              const SolverParams& params,
                              CallCounts* counts = nullptr);

}  // namespace circuitlp

#endif  // CIRCUITLP_VARIABLE_FIXING_HPP_
