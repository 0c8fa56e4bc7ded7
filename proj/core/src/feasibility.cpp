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

#include "circuitlp/feasibility.hpp"

#include <algorithm>

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"

namespace circuitlp {

namespace {

Vector indicator(const IndexSet& set, std::size_t n) {
  Vector v = zeros(n);
  for (Index i : set) v[i] = 1;
  return v;
}

}  // namespace

AuxLp build_aux_lp(const Matrix& a, const Vector& b) {
  auto x = solve_any(a, b);
  if (!x) throw Error(ErrorCode::kNoLinearSolution, "A x = b is inconsistent");
  const std::size_t n = a.cols();
  AuxLp aux;
  aux.a = Matrix(a.rows(), 2 * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      aux.a(i, j) = a(i, j);
      aux.a(i, n + j) = -a(i, j);
    }
  }
  aux.b = b;
  std::vector<Index> z(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = n + j;
  aux.zero_set = IndexSet(z);
  aux.c = indicator(aux.zero_set, 2 * n);
  aux.start = positive_part(*x);
  const Vector neg = negative_part(*x);
  aux.start.insert(aux.start.end(), neg.begin(), neg.end());
  return aux;
}

FeasibilityResult feasibility(const Matrix& a, const Vector& b,
                              const IndexSet& zero_set, const Vector& x0,
                              const SolverParams& params, CallCounts* counts) {
  const std::size_t n = a.cols();
  if (!is_feasible(a, b, x0)) {
    throw Error(ErrorCode::kInfeasibleStart, "x0 is not in P");
  }
  const Vector c = indicator(zero_set, n);
  const Rational spread =
      4 * Rational(static_cast<long>(params.m * params.n)) * params.kappa_hat;
  FeasibilityResult out;
  CallCounts local;
  CallCounts& calls = counts ? *counts : local;
  const std::size_t ratio_base = calls.ratio, support_base = calls.support;

  Vector x = x0;
  IndexSet large;
  std::size_t large_rank = 0;
  bool first = true;
  std::size_t t = 0;
  auto record = [&](OracleTag tag, const Vector& g, const Augmentation& aug) {
    out.steps.push_back(SolverStep{t, 0, tag, g, *aug.step, x, aug.x,
                                   norm1(aug.x, zero_set), large.size(),
                                   large_rank});
    x = aug.x;
    ++t;
  };

  while (sgn(norm1(x, zero_set)) != 0) {
    const Rational threshold = spread * norm1(x, zero_set);
    std::vector<Index> grown(large.begin(), large.end());
    for (Index i = 0; i < n; ++i) {
      if (x[i] >= threshold) grown.push_back(i);
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    large = IndexSet(grown);
    const std::size_t r = rank(a, large);
    const bool drain = first || r > large_rank;
    first = false;
    large_rank = r;
    if (drain) {
      while (sgn(norm1(x, zero_set)) != 0) {
        auto z = support_circuit(a, c, x, zero_set);
        if (!z) break;
        if (calls.support - support_base >= params.support_cap()) {
          throw Error(ErrorCode::kIterationCap, "Support-Circuit budget");
        }
        ++calls.support;
        Augmentation aug = augment_maximal(a, x, z->g);
        if (aug.unbounded()) {
          throw Error(ErrorCode::kAssertionFailed, "unbounded support step");
        }
        record(OracleTag::kSupportCircuit, z->g, aug);
      }
      if (sgn(norm1(x, zero_set)) == 0) break;
    }
    if (calls.ratio - ratio_base >= params.feasibility_ratio_cap()) {
      throw Error(ErrorCode::kIterationCap, "Ratio-Circuit budget");
    }
    ++calls.ratio;
    RatioCircuitResult res = ratio_circuit(a, c, inverse_weights(x));
    if (sgn(res.dual.lower_bound(b)) > 0) {
      out.certificate = std::move(res.dual);
      out.calls = {calls.ratio - ratio_base, calls.support - support_base};
      return out;
    }
    if (res.status == RatioStatus::kZero) {
      // x would be optimal with <c, x> > 0, so the bound above had to fire.
      throw Error(ErrorCode::kAssertionFailed,
                  "Ratio-Circuit found no improving circuit and no certificate");
    }
    Augmentation aug = augment_maximal(a, x, res.g->g);
    if (aug.unbounded()) {
      throw Error(ErrorCode::kAssertionFailed, "unbounded ratio step");
    }
    record(OracleTag::kRatioCircuit, res.g->g, aug);
  }
  out.x = x;
  out.calls = {calls.ratio - ratio_base, calls.support - support_base};
  return out;
}

FeasibilityRun feasibility_auto(const Matrix& a, const Vector& b,
                                const IndexSet& zero_set, const Vector& x0,
                                const DoublingOptions& options) {
  const std::size_t m = std::max<std::size_t>(1, rank(a));
  std::vector<EstimateAttempt> attempts;
  auto runner = [&](const Rational& kappa) -> std::optional<FeasibilityResult> {
    attempts.push_back({kappa, {}, false});
    try {
      FeasibilityResult r = feasibility(
          a, b, zero_set, x0, SolverParams::make(m, a.cols(), kappa),
          &attempts.back().calls);
      attempts.back().succeeded = true;
      return r;
    } catch (const Error& e) {
      if (!is_kappa_failure(e.code())) throw;
      return std::nullopt;
    }
  };
  auto done = kappa_doubling_run(Rational(static_cast<long>(a.cols())), runner,
                                 options);
  return {std::move(done.value), done.kappa_hat, std::move(attempts)};
}

PhaseOneResult find_feasible_point(const Matrix& a, const Vector& b,
                                   const DoublingOptions& options) {
  PhaseOneResult out;
  const std::size_t n = a.cols();
  if (!solve_any(a, b)) {
    // Some y with A^T y = 0 and <b, y> != 0.
    const Matrix left = kernel_basis(a.transpose());
    for (std::size_t j = 0; j < left.cols(); ++j) {
      Vector y = left.column(j);
      const Rational by = dot(b, y);
      if (sgn(by) == 0) continue;
      if (sgn(by) > 0) y = -y;
      out.certificate = DualCertificate{y, zeros(n), Rational(0)};
      return out;
    }
    throw Error(ErrorCode::kAssertionFailed, "inconsistent system without certificate");
  }
  const AuxLp aux = build_aux_lp(a, b);
  out.run = feasibility_auto(aux.a, aux.b, aux.zero_set, aux.start, options);
  if (out.run.result.x) {
    Vector x(out.run.result.x->begin(), out.run.result.x->begin() + n);
    out.x = std::move(x);
  } else {
    const Vector& y = out.run.result.certificate->y;
    out.certificate = DualCertificate{y, a.transpose() * y, Rational(0)};
  }
  return out;
}

}  // namespace circuitlp
