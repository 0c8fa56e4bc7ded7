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

#include "circuitlp/variable_fixing.hpp"

#include <algorithm>

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/lp_instance.hpp"
#include "circuitlp/oracles.hpp"

namespace circuitlp {

namespace {

Rational as_rational(std::size_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

IndexSet fixing_set(const Vector& c, const Vector& c_prime,
                    const Vector& s_prime, const Rational& kappa_hat,
                    std::size_t m) {
  const Rational bound = as_rational(m + 1) * kappa_hat * norm_inf(c - c_prime);
  std::vector<Index> out;
  for (Index j = 0; j < s_prime.size(); ++j) {
    if (s_prime[j] > bound) out.push_back(j);
  }
  return IndexSet(out);
}

bool big_slack_exists(const Vector& c, const Vector& r, const Vector& s_prime,
                      std::size_t m, std::size_t n, const Rational& kappa_hat) {
  const Rational cs = as_rational(static_cast<std::size_t>(ceil_sqrt(static_cast<long>(n))));
  const Rational norm = norm2_squared(c);
  if (norm < 1 || norm >= 4 || norm_inf(r) * cs * as_rational(m + 2) * kappa_hat >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "big-slack preconditions");
  }
  const Rational threshold = as_rational(m + 1) / (cs * as_rational(m + 2));
  return std::any_of(s_prime.begin(), s_prime.end(),
                     [&](const Rational& s) { return s > threshold; });
}

FixingOutcome variable_fixing(const Matrix& a, const Vector& b,
                              const Vector& c_in, const Vector& x0,
                              const SolverParams& params, CallCounts* counts) {
  const std::size_t n = a.cols();
  if (!is_feasible(a, b, x0)) {
    throw Error(ErrorCode::kInfeasibleStart, "x0 is not in P");
  }
  FixingOutcome out;
  out.x = x0;
  const Vector projected = project_to_kernel(a, c_in);
  if (is_zero(projected)) {
    out.optimal = true;
    out.cost = projected;
    return out;
  }
  const Vector c = scale_to_unit_band(projected).first;
  out.cost = c;

  CallCounts local;
  CallCounts& calls = counts ? *counts : local;
  const std::size_t ratio_base = calls.ratio, support_base = calls.support;

  // Any dual feasible slack for LP(c) starts the first phase.
  ++calls.ratio;
  Vector slack = ratio_circuit(a, c, unit_weights(n)).dual.s;

  Vector& x = out.x;
  Vector cost = c;
  Vector perturbation = zeros(n);
  IndexSet large;
  std::size_t large_rank = 0;
  std::size_t t = 0;
  FixingPhase* phase = nullptr;

  auto record = [&](OracleTag tag, const Vector& g, const Augmentation& aug) {
    out.steps.push_back(SolverStep{t, out.phases.size(), tag, g, *aug.step, x,
                                   aug.x, dot(cost, aug.x), large.size(),
                                   large_rank});
    x = aug.x;
    ++t;
  };

  while (sgn(dot(slack, x)) > 0) {
    std::vector<Index> big;
    for (Index i = 0; i < n; ++i) {
      if (slack[i] >= params.delta) big.push_back(i);
    }
    const IndexSet s_set(big);
    const Rational threshold = params.gamma * norm1(x, s_set);
    std::vector<Index> grown(large.begin(), large.end());
    for (Index i = 0; i < n; ++i) {
      if (x[i] >= threshold) grown.push_back(i);
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    large = IndexSet(grown);
    const std::size_t r = rank(a, large);
    if (phase == nullptr || r > large_rank) {
      if (out.phases.size() >= params.m + 1) {
        throw Error(ErrorCode::kAssertionFailed, "more than m + 1 phases");
      }
      Vector next = zeros(n);
      for (Index i : s_set) next[i] = slack[i];
      perturbation = perturbation + (slack - next);
      cost = std::move(next);
      out.phases.push_back(FixingPhase{t, cost, perturbation, large, r, 0, 0});
      phase = &out.phases.back();
      large_rank = r;
      const IndexSet cost_support = support(cost);
      while (true) {
        auto z = support_circuit(a, cost, x, cost_support);
        if (!z) break;
        if (phase->support_calls >= n ||
            calls.support - support_base >= params.support_cap()) {
          throw Error(ErrorCode::kIterationCap, "Support-Circuit budget");
        }
        ++phase->support_calls;
        ++calls.support;
        Augmentation aug = augment_maximal(a, x, z->g);
        if (aug.unbounded()) {
          throw Error(ErrorCode::kAssertionFailed, "unbounded support step");
        }
        record(OracleTag::kSupportCircuit, z->g, aug);
      }
    }
    large_rank = r;
    if (phase->ratio_calls >= params.phase_ratio_cap) {
      throw Error(ErrorCode::kIterationCap, "Ratio-Circuit budget per phase");
    }
    ++phase->ratio_calls;
    ++calls.ratio;
    RatioCircuitResult res = ratio_circuit(a, cost, inverse_weights(x));
    if (res.status == RatioStatus::kCircuit) {
      Augmentation aug = augment_maximal(a, x, res.g->g);
      if (aug.unbounded()) {
        throw Error(ErrorCode::kAssertionFailed, "unbounded ratio step");
      }
      record(OracleTag::kRatioCircuit, res.g->g, aug);
    }
    // Ties go to the phase cost.
    slack = dot(res.dual.s, x) < dot(cost, x) ? res.dual.s : cost;
    if (res.status == RatioStatus::kZero && sgn(dot(slack, x)) > 0) {
      throw Error(ErrorCode::kAssertionFailed,
                  "zero ratio circuit with positive complementarity gap");
    }
  }
  out.final_slack = slack;
  if (!big_slack_exists(c, perturbation, slack, params.m, n, params.kappa_hat)) {
    throw Error(ErrorCode::kAssertionFailed, "no big dual slack at termination");
  }
  const Rational bound = params.kappa_hat * as_rational(params.m + 1) *
                         as_rational(n) * params.delta;
  std::vector<Index> fixed;
  for (Index i = 0; i < n; ++i) {
    if (slack[i] > bound) fixed.push_back(i);
  }
  out.fixed = IndexSet(fixed);
  if (out.fixed.empty()) throw Error(ErrorCode::kEmptyN, "no index to fix");
  out.calls = {calls.ratio - ratio_base, calls.support - support_base};
  return out;
}

}  // namespace circuitlp
