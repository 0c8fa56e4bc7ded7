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

#ifndef CIRCUITLP_GENERAL_FORM_HPP_
#define CIRCUITLP_GENERAL_FORM_HPP_

#include <optional>

#include "circuitlp/lp_instance.hpp"
#include "circuitlp/oracles.hpp"

namespace circuitlp {

// P = {x : A x = b, B x <= d}, with an optional linear cost on x.
struct GeneralFormSystem {
  Matrix a;
  Matrix b_ineq;
  Vector b;
  Vector d;
  std::optional<Vector> c;

  std::size_t n() const { return b_ineq.cols(); }
  friend bool operator==(const GeneralFormSystem&,
                         const GeneralFormSystem&) = default;
};

bool is_feasible(const GeneralFormSystem& sys, const Vector& x);

// Maximal step from x along g in P: the largest alpha with
// B(x + alpha g) <= d. Throws kNotInKernel when A g != 0.
Augmentation augment_general(const GeneralFormSystem& sys, const Vector& x,
                             const Vector& g);

// Slack-space view of a pointed general-form system. With
// M = [A 0; B I] and q = (b; d), Q is the projection of
// {(x, s) : M(x, s) = q, s >= 0} to s, written in standard form as
// {s >= 0 : Z_B s = Z_A b + Z_B d} where Z spans the left kernel of [A; B].
class GeneralFormReduction {
 public:
  const GeneralFormSystem& system() const { return system_; }
  const LpInstance& standard() const { return standard_; }
  const Matrix& lifted() const { return lifted_; }
  const Vector& lifted_rhs() const { return lifted_rhs_; }

  // psi: the unique x with M(x, s) = q.
  Vector psi(const Vector& s) const;
  // Inverse of psi on P: s = d - B x.
  Vector project(const Vector& x) const;
  // The unique g with (g, h) in ker(M).
  Vector lift_direction(const Vector& h) const;
  // Objective offset: <c, psi(s)> = offset + <standard().c, s>.
  const Rational& objective_offset() const { return offset_; }

 private:
  friend GeneralFormReduction general_form_reduce(const GeneralFormSystem&);

  GeneralFormSystem system_;
  LpInstance standard_;
  Matrix lifted_;
  Vector lifted_rhs_;
  Matrix stacked_;  // [A; B]
  Matrix left_inverse_;
  Rational offset_;
};

// Throws kLinealitySpace when rk [A; B] < n, kDimensionMismatch on shape
// errors.
GeneralFormReduction general_form_reduce(const GeneralFormSystem& sys);

}  // namespace circuitlp

#endif  // CIRCUITLP_GENERAL_FORM_HPP_
