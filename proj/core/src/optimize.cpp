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

#include "circuitlp/optimize.hpp"

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/oracles.hpp"

namespace circuitlp {

namespace {

// Drops each coordinate with positive cost to zero when no constraint row
// involves the remaining columns; every unit vector is then a circuit.
void settle_free_columns(const Vector& c, const IndexSet& cols, Vector& x,
                         OptimizeResult& out) {
  const std::size_t n = x.size();
  for (Index j : cols) {
    if (sgn(c[j]) <= 0 || sgn(x[j]) == 0) continue;
    Vector g = -unit_vector(n, j);
    Vector next = x;
    next[j] = 0;
    out.steps.push_back(SolverStep{out.steps.size(), 0, OracleTag::kSupportCircuit,
                                   g, x[j], x, next, dot(c, next), 0, 0});
    x = std::move(next);
  }
}

SolverStep lift(const SolverStep& s, const IndexSet& cols, std::size_t n,
                std::size_t iteration) {
  SolverStep out = s;
  out.iteration = iteration;
  out.direction = embed(s.direction, cols, n);
  out.x_before = embed(s.x_before, cols, n);
  out.x_after = embed(s.x_after, cols, n);
  return out;
}

}  // namespace

std::optional<Vector> unbounded_ray(const Matrix& a, const Vector& c) {
  const std::size_t m = a.rows(), n = a.cols();
  // min <c, z>  s.t.  A z = 0,  <1, z> + sigma = 1,  z, sigma >= 0.
  Matrix box(m + 1, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) box(i, j) = a(i, j);
  }
  for (std::size_t j = 0; j <= n; ++j) box(m, j) = 1;
  Vector rhs = zeros(m + 1);
  rhs[m] = 1;
  Vector cost = c;
  cost.push_back(0);
  SimplexOutcome out = simplex_solve(box, rhs, cost);
  if (out.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kAssertionFailed, "ray program is bounded and feasible");
  }
  if (sgn(out.objective) >= 0) return std::nullopt;
  return Vector(out.x->begin(), out.x->begin() + static_cast<long>(n));
}

OptimizeResult optimize(const Matrix& a, const Vector& b, const Vector& c,
                        const Vector& x0, const Rational& kappa_hat,
                        CallCounts* counts) {
  const std::size_t n = a.cols();
  if (c.size() != n) throw Error(ErrorCode::kDimensionMismatch, "cost length");
  if (!is_feasible(a, b, x0)) {
    throw Error(ErrorCode::kInfeasibleStart, "x0 is not in P");
  }
  CallCounts local;
  CallCounts& calls = counts ? *counts : local;
  const CallCounts base = calls;
  OptimizeResult out;
  out.x = x0;
  if (auto ray = unbounded_ray(a, c)) {
    out.status = LpStatus::kUnbounded;
    out.ray = std::move(ray);
    out.objective = dot(c, x0);
    return out;
  }
  IndexSet cols = IndexSet::range(n);
  Vector& x = out.x;
  while (!cols.empty()) {
    const Matrix ac = a.select_columns(cols);
    const IndexSet rows = independent_rows(ac);
    if (rows.empty()) {
      settle_free_columns(c, cols, x, out);
      break;
    }
    const Matrix ar = ac.select_rows(rows);
    const SolverParams params =
        SolverParams::make(rows.size(), cols.size(), kappa_hat);
    FixingOutcome fo = variable_fixing(ar, restrict(b, rows), restrict(c, cols),
                                       restrict(x, cols), params, &calls);
    for (const SolverStep& s : fo.steps) {
      out.steps.push_back(lift(s, cols, n, out.steps.size()));
    }
    x = embed(fo.x, cols, n);
    std::vector<Index> fixed;
    for (Index j : fo.fixed) fixed.push_back(cols[j]);
    const bool done = fo.optimal;
    out.rounds.push_back(FixingRound{cols, params, std::move(fo), IndexSet(fixed)});
    if (done) break;
    cols = cols.minus(out.rounds.back().fixed);
  }
  if (ratio_circuit(a, c, inverse_weights(x)).status != RatioStatus::kZero) {
    throw Error(ErrorCode::kAssertionFailed, "final point is not optimal");
  }
  out.objective = dot(c, x);
  out.calls = {calls.ratio - base.ratio, calls.support - base.support};
  return out;
}

OptimizeRun optimize_auto(const Matrix& a, const Vector& b, const Vector& c,
                          const Vector& x0, std::optional<Rational> start,
                          const DoublingOptions& options) {
  std::vector<EstimateAttempt> attempts;
  auto runner = [&](const Rational& kappa) -> std::optional<OptimizeResult> {
    attempts.push_back({kappa, {}, false});
    try {
      OptimizeResult r = optimize(a, b, c, x0, kappa, &attempts.back().calls);
      attempts.back().succeeded = true;
      return r;
    } catch (const Error& e) {
      if (!is_kappa_failure(e.code())) throw;
      return std::nullopt;
    }
  };
  auto done = kappa_doubling_run(
      start.value_or(Rational(static_cast<long>(a.cols()))), runner, options);
  return {std::move(done.value), done.kappa_hat, std::move(attempts)};
}

SolveResult solve(const LpInstance& inst, const std::optional<Vector>& start) {
  const std::size_t n = inst.n();
  if (inst.capacitated()) {
    const Bounds& u = *inst.u;
    std::vector<Index> fin;
    for (Index i = 0; i < n; ++i) {
      if (u[i].is_finite()) fin.push_back(i);
    }
    const std::size_t m = inst.m(), f = fin.size();
    LpInstance flat;
    flat.a = Matrix(m + f, n + f);
    flat.b = inst.b;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) flat.a(i, j) = inst.a(i, j);
    }
    for (std::size_t k = 0; k < f; ++k) {
      flat.a(m + k, fin[k]) = 1;
      flat.a(m + k, n + k) = 1;
      flat.b.push_back(u[fin[k]].value());
    }
    flat.c = inst.c;
    flat.c.resize(n + f, Rational(0));
    std::optional<Vector> flat_start;
    if (start) {
      if (!is_feasible(inst, *start)) {
        throw Error(ErrorCode::kInfeasibleStart, "start violates the bounds");
      }
      flat_start = *start;
      for (std::size_t k = 0; k < f; ++k) {
        flat_start->push_back(u[fin[k]].value() - (*start)[fin[k]]);
      }
    }
    SolveResult r = solve(flat, flat_start);
    if (r.x) r.x->resize(n);
    if (r.ray) r.ray->resize(n);
    return r;
  }

  SolveResult out;
  Vector x0;
  if (start) {
    if (!is_feasible(inst.a, inst.b, *start)) {
      throw Error(ErrorCode::kInfeasibleStart, "start is not in P");
    }
    x0 = *start;
  } else {
    out.phase_one = find_feasible_point(inst.a, inst.b);
    if (!out.phase_one->x) {
      out.status = LpStatus::kInfeasible;
      out.infeasibility = out.phase_one->certificate;
      return out;
    }
    x0 = *out.phase_one->x;
  }
  const IndexSet rows = independent_rows(inst.a);
  out.phase_two = optimize_auto(inst.a.select_rows(rows), restrict(inst.b, rows),
                                inst.c, x0);
  const OptimizeResult& r = out.phase_two->result;
  out.status = r.status;
  if (r.status == LpStatus::kUnbounded) {
    out.ray = r.ray;
  } else {
    out.x = r.x;
    out.objective = r.objective;
  }
  return out;
}

}  // namespace circuitlp
