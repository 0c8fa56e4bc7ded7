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

#ifndef CIRCUITLP_LP_INSTANCE_HPP_
#define CIRCUITLP_LP_INSTANCE_HPP_

#include <optional>
#include <vector>

#include "circuitlp/matrix.hpp"

namespace circuitlp {

using Bounds = std::vector<ExtendedRational>;

// min <c, x>  s.t.  A x = b, 0 <= x (<= u when capacitated).
struct LpInstance {
  Matrix a;
  Vector b;
  Vector c;
  std::optional<Bounds> u;

  std::size_t m() const { return a.rows(); }
  std::size_t n() const { return a.cols(); }
  bool capacitated() const { return u.has_value(); }

  // Throws kDimensionMismatch, kRankDeficient (rk(A) < m) or
  // kInvalidArgument (a finite bound <= 0).
  void validate() const;

  friend bool operator==(const LpInstance&, const LpInstance&) = default;
};

// Feasibility of x for the instance: A x = b, x >= 0, x <= u.
bool is_feasible(const LpInstance& inst, const Vector& x);
bool is_feasible(const Matrix& a, const Vector& b, const Vector& x,
                 const std::optional<Bounds>& u = std::nullopt);

}  // namespace circuitlp

#endif  // CIRCUITLP_LP_INSTANCE_HPP_
