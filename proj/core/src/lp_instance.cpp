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

#include "circuitlp/lp_instance.hpp"

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"

namespace circuitlp {

void LpInstance::validate() const {
  if (a.rows() == 0 || a.cols() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "instance needs m, n >= 1");
  }
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "b has wrong length");
  }
  if (c.size() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "c has wrong length");
  }
  if (u) {
    if (u->size() != a.cols()) {
      throw Error(ErrorCode::kDimensionMismatch, "u has wrong length");
    }
    for (const auto& ui : *u) {
      if (ui.is_finite() && sgn(ui.value()) <= 0) {
        throw Error(ErrorCode::kInvalidArgument, "finite bounds must be > 0");
      }
    }
  }
  std::size_t r = rank(a);
  if (r != a.rows()) {
    throw Error(ErrorCode::kRankDeficient,
                "rk(A) = " + std::to_string(r) + " < m = " +
                    std::to_string(a.rows()));
  }
}

bool is_feasible(const Matrix& a, const Vector& b, const Vector& x,
                 const std::optional<Bounds>& u) {
  if (x.size() != a.cols()) return false;
  if (!is_nonnegative(x)) return false;
  if (u) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((*u)[i].is_finite() && x[i] > (*u)[i].value()) return false;
    }
  }
  return a * x == b;
}

bool is_feasible(const LpInstance& inst, const Vector& x) {
  return is_feasible(inst.a, inst.b, x, inst.u);
}

}  // namespace circuitlp
