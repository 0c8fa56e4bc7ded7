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

#ifndef CIRCUITLP_SOLVER_STEP_HPP_
#define CIRCUITLP_SOLVER_STEP_HPP_

#include <cstddef>

#include "circuitlp/matrix.hpp"
#include "circuitlp/walks.hpp"

namespace circuitlp {

// One augmentation of the feasibility or variable-fixing algorithm.
struct SolverStep {
  std::size_t iteration = 0;
  std::size_t phase = 0;
  OracleTag oracle = OracleTag::kRatioCircuit;
  Vector direction;
  Rational step;
  Vector x_before;
  Vector x_after;
  // ||x_N||_1 for feasibility, <c~, x> for variable fixing (after the step).
  Rational potential;
  std::size_t large_size = 0;
  std::size_t large_rank = 0;
};

// Oracle calls, counted as they happen so that runs aborted by an
// exhausted budget still report their work.
struct CallCounts {
  std::size_t ratio = 0;
  std::size_t support = 0;

  std::size_t total() const { return ratio + support; }
};

struct EstimateAttempt {
  Rational kappa_hat;
  CallCounts calls;
  bool succeeded = false;
};

}  // namespace circuitlp

#endif  // CIRCUITLP_SOLVER_STEP_HPP_
