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

#include "circuitlp/general_form.hpp"

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"

namespace circuitlp {

bool is_feasible(const GeneralFormSystem& sys, const Vector& x) {
  if (x.size() != sys.n()) return false;
  if (sys.a.rows() > 0 && sys.a * x != sys.b) return false;
  const Vector bx = sys.b_ineq * x;
  for (std::size_t i = 0; i < bx.size(); ++i) {
    if (bx[i] > sys.d[i]) return false;
  }
  return true;
}

Augmentation augment_general(const GeneralFormSystem& sys, const Vector& x,
                             const Vector& g) {
  if (is_zero(g)) throw Error(ErrorCode::kZeroDirection, "g = 0");
  if (sys.a.rows() > 0 && !is_zero(sys.a * g)) {
    throw Error(ErrorCode::kNotInKernel, "A g != 0");
  }
  const Vector slack = sys.d - sys.b_ineq * x;
  const Vector bg = sys.b_ineq * g;
  std::optional<Rational> alpha;
  for (std::size_t i = 0; i < bg.size(); ++i) {
    if (sgn(bg[i]) > 0) {
      Rational t = slack[i] / bg[i];
      if (!alpha || t < *alpha) alpha = t;
    }
  }
  if (!alpha) return {x, std::nullopt};
  return {x + *alpha * g, alpha};
}

Vector GeneralFormReduction::psi(const Vector& s) const {
  const std::size_t ma = system_.a.rows();
  Vector rhs(ma + s.size());
  for (std::size_t i = 0; i < ma; ++i) rhs[i] = system_.b[i];
  for (std::size_t j = 0; j < s.size(); ++j) rhs[ma + j] = system_.d[j] - s[j];
  return left_inverse_ * rhs;
}

Vector GeneralFormReduction::project(const Vector& x) const {
  return system_.d - system_.b_ineq * x;
}

Vector GeneralFormReduction::lift_direction(const Vector& h) const {
  const std::size_t ma = system_.a.rows();
  Vector rhs = zeros(ma + h.size());
  for (std::size_t j = 0; j < h.size(); ++j) rhs[ma + j] = -h[j];
  return left_inverse_ * rhs;
}

GeneralFormReduction general_form_reduce(const GeneralFormSystem& sys) {
  const std::size_t n = sys.n();
  const std::size_t ma = sys.a.rows(), mb = sys.b_ineq.rows();
  if ((ma > 0 && sys.a.cols() != n) || sys.b.size() != ma ||
      sys.d.size() != mb || (sys.c && sys.c->size() != n)) {
    throw Error(ErrorCode::kDimensionMismatch, "general-form shapes");
  }
  GeneralFormReduction red;
  red.system_ = sys;
  red.stacked_ = ma > 0 ? sys.a.vcat(sys.b_ineq) : sys.b_ineq;
  if (rank(red.stacked_) != n) {
    throw Error(ErrorCode::kLinealitySpace,
                "rk [A; B] < n: the polyhedron has a lineality space");
  }
  // (S^T S)^{-1} S^T is a left inverse of the full-column-rank stack S.
  const Matrix st = red.stacked_.transpose();
  const Matrix gram = st * red.stacked_;
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = solve_square(gram, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  red.left_inverse_ = inv * st;

  Matrix lifted(ma + mb, n + mb);
  for (std::size_t i = 0; i < ma + mb; ++i) {
    for (std::size_t j = 0; j < n; ++j) lifted(i, j) = red.stacked_(i, j);
  }
  for (std::size_t j = 0; j < mb; ++j) lifted(ma + j, n + j) = 1;
  red.lifted_ = lifted;
  red.lifted_rhs_ = sys.b;
  red.lifted_rhs_.insert(red.lifted_rhs_.end(), sys.d.begin(), sys.d.end());

  // Left kernel Z of [A; B]; Q's equality system is Z_B s = Z q.
  const Matrix z = kernel_basis(st).transpose();
  std::vector<Index> bcols;
  for (std::size_t j = 0; j < mb; ++j) bcols.push_back(ma + j);
  Matrix zb = z.select_columns(IndexSet(bcols));
  Vector rhs = z * red.lifted_rhs_;
  const IndexSet keep = independent_rows(zb);
  LpInstance& q = red.standard_;
  q.a = zb.select_rows(keep);
  q.b = restrict(rhs, keep);
  q.c = zeros(mb);
  red.offset_ = 0;
  if (sys.c) {
    // <c, P (b; d - s)> = <c, P (b; d)> - <P_B^T c, s>.
    const Vector pc = red.left_inverse_.transpose() * *sys.c;
    red.offset_ = dot(pc, red.lifted_rhs_);
    for (std::size_t j = 0; j < mb; ++j) q.c[j] = -pc[ma + j];
  }
  return red;
}

}  // namespace circuitlp
