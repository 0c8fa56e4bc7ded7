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

#ifndef CIRCUITLP_ORACLES_HPP_
#define CIRCUITLP_ORACLES_HPP_

#include <optional>
#include <vector>

#include "circuitlp/circuits.hpp"
#include "circuitlp/lp_instance.hpp"
#include "circuitlp/matrix.hpp"

namespace circuitlp {

using Weights = std::vector<ExtendedRational>;

// 1/x with 1/0 = infinity.
Weights inverse_weights(const Vector& x);
Weights unit_weights(std::size_t n);

// <w, z^-> with the convention inf * 0 = 0. Throws kInvalidArgument if an
// infinite weight meets a negative entry.
Rational weighted_negative_part(const Weights& w, const Vector& z);

// Dual of the ratio program:  max -lambda  s.t.  s = c + A^T y,
// 0 <= s <= lambda * w.
//
// Note the sign of y: the usual LP dual multiplier (s = c - A^T y) is -y.
struct DualCertificate {
  Vector y;
  Vector s;
  Rational lambda;

  // <b, -y>: a lower bound on the LP optimum by weak duality.
  Rational lower_bound(const Vector& b) const { return -dot(b, y); }
  // Multiplier in the s = c - A^T y convention.
  Vector standard_y() const { return -y; }
};

// Checks s = c + A^T y, 0 <= s <= lambda w and lambda >= 0 exactly.
bool is_valid_dual(const Matrix& a, const Vector& c, const Weights& w,
                   const DualCertificate& d);

enum class RatioStatus { kCircuit, kZero };

struct RatioCircuitResult {
  RatioStatus status = RatioStatus::kZero;
  std::optional<ElementaryVector> g;  // kCircuit only; scaled to <w, g^-> = 1
  DualCertificate dual;
};

// Support-Circuit: an elementary vector z with supp(z) ⊆ supp(x), meeting S,
// oriented so that <c, z> <= 0; nullopt when no circuit of supp(x) meets S.
std::optional<ElementaryVector> support_circuit(const Matrix& a,
                                                const Vector& c,
                                                const Vector& x,
                                                const IndexSet& s);

// Same, with the admissible support given explicitly (used by the
// capacitated walk, where only coordinates strictly inside their bounds may
// move).
std::optional<ElementaryVector> support_circuit_within(const Matrix& a,
                                                       const Vector& c,
                                                       const IndexSet& within,
                                                       const IndexSet& s);

// Ratio-Circuit: min <c, z> s.t. A z = 0, <w, z^-> <= 1, solved through the
// split z = p - q (q_i fixed to 0 where w_i = inf). The LP solution is
// decomposed conformally and the part of minimum <c,h>/<w,h^-> is returned,
// rescaled so that <w, g^-> = 1. Throws kUnboundedRatioLP.
RatioCircuitResult ratio_circuit(const Matrix& a, const Vector& c,
                                 const Weights& w);

struct Augmentation {
  Vector x;
  std::optional<Rational> step;  // nullopt: unbounded ray, x unchanged

  bool unbounded() const { return !step.has_value(); }
};

// x + alpha g with alpha maximal such that 0 <= x + alpha g (<= u).
// Throws kZeroDirection for g = 0 and kNotInKernel for A g != 0.
Augmentation augment_maximal(const Matrix& a, const Vector& x,
                             const Vector& g,
                             const std::optional<Bounds>& u = std::nullopt);

}  // namespace circuitlp

#endif  // CIRCUITLP_ORACLES_HPP_
