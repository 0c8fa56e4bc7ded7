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

#ifndef CIRCUITLP_PARAMS_HPP_
#define CIRCUITLP_PARAMS_HPP_

#include <cstddef>

#include "circuitlp/rational.hpp"

namespace circuitlp {

// Rational upper bound on ln x for x >= 1: 0.6932 (floor(log2 x) + 1).
Rational ln_upper_bound(const Rational& x);

// Step and threshold parameters of the feasibility and variable-fixing
// algorithms for an m x n system. sqrt(n) is replaced by ceil(sqrt(n))
// everywhere it appears.
struct SolverParams {
  std::size_t m = 0;
  std::size_t n = 0;
  Rational kappa_hat;
  // 1 / (2 n ceil_sqrt(n) (m+2) kappa): never larger than the exact value.
  Rational delta;
  // 4 (m+2) ceil_sqrt(n) kappa^2 T / delta.
  Rational gamma;
  // Ratio-Circuit calls per phase of variable fixing; the least fixed point
  // of T = 1 + ceil(n ln(2 n^2 ceil_sqrt(n)^3 kappa^2 Gamma(T) / delta)).
  std::size_t phase_ratio_cap = 0;
  // Constant in the feasibility Ratio-Circuit budget.
  std::size_t cap_factor = 10;

  static SolverParams make(std::size_t m, std::size_t n,
                           const Rational& kappa_hat);

  // cap_factor m n (ceil(log2(n + kappa)) + 1).
  std::size_t feasibility_ratio_cap() const;
  // (m+1) n.
  std::size_t support_cap() const { return (m + 1) * n; }
};

}  // namespace circuitlp

#endif  // CIRCUITLP_PARAMS_HPP_
