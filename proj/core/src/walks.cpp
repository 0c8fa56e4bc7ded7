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

#include "circuitlp/walks.hpp"

#include <algorithm>

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/oracles.hpp"

namespace circuitlp {

namespace {

void require_length(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) throw Error(ErrorCode::kDimensionMismatch, what);
}

std::size_t cap_or(const std::optional<std::size_t>& cap,
                   std::size_t fallback) {
  return cap ? *cap : fallback;
}

void add(TraceReport& report, std::size_t t, std::string check, bool kappa,
         std::string detail = {}) {
  report.violations.push_back(
      LemmaViolation{t, std::move(check), kappa, std::move(detail)});
}

bool at_bound(const Rational& x, const ExtendedRational& u) {
  return sgn(x) == 0 || (u.is_finite() && x == u.value());
}

// Some coordinate that moves binds exactly after the step.
bool step_is_maximal(const Vector& after, const Vector& g,
                     const std::optional<Bounds>& u) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sgn(g[i]) < 0 && sgn(after[i]) == 0) return true;
    if (sgn(g[i]) > 0 && u && (*u)[i].is_finite() && after[i] == (*u)[i].value()) {
      return true;
    }
  }
  return false;
}

// Coordinates of L ∪ H not yet at their target value.
IndexSet unsettled(const Vector& x, const Vector& target, const Partition& p) {
  std::vector<Index> out;
  for (Index i : p.lower.unite(p.upper)) {
    if (x[i] != target[i]) out.push_back(i);
  }
  return IndexSet(out);
}

}  // namespace

const char* to_string(OracleTag tag) {
  switch (tag) {
    case OracleTag::kDecomposition: return "decomposition";
    case OracleTag::kSupportCircuit: return "support_circuit";
    case OracleTag::kRatioCircuit: return "ratio_circuit";
  }
  return "unknown";
}

std::size_t TraceReport::structural_violations() const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(),
                    [](const LemmaViolation& v) { return !v.kappa_dependent; }));
}

std::size_t default_walk_cap(std::size_t m, std::size_t n,
                             const Rational& kappa_hat) {
  const std::size_t spread = std::min(m, n - std::min(n, m));
  const long lg = ceil_log2(Rational(static_cast<long>(m)) + kappa_hat);
  return 10 * m * spread * static_cast<std::size_t>(std::max(0L, lg) + 1);
}

DiameterAnalysisSets analysis_sets(const Vector& x, const Vector& target,
                                   const IndexSet& nonbasic, std::size_t n,
                                   std::size_t m, const Rational& kappa_hat) {
  const Rational threshold =
      Rational(static_cast<long>(n)) * kappa_hat * norm1(x, nonbasic);
  const Rational factor(static_cast<long>(n - std::min(n, m)));
  std::vector<Index> large, rest, reached;
  for (Index i = 0; i < x.size(); ++i) {
    (target[i] > threshold ? large : rest).push_back(i);
    if (x[i] <= factor * target[i]) reached.push_back(i);
  }
  return {IndexSet(large), IndexSet(rest), IndexSet(reached)};
}

WalkTrace diameter_walk(const Matrix& a, const Vector& b,
                        const IndexSet& target_basis, const Vector& x0,
                        const Rational& kappa_hat, const WalkOptions& options) {
  const std::size_t n = a.cols();
  require_length(b, a.rows(), "walk right-hand side");
  require_length(x0, n, "walk start");
  if (!is_feasible(a, b, x0)) {
    throw Error(ErrorCode::kInfeasibleStart, "x0 is not in P");
  }
  WalkTrace trace;
  trace.a = a;
  trace.b = b;
  trace.start = x0;
  trace.target = basic_solution(a, b, target_basis);
  if (!is_nonnegative(trace.target)) {
    throw Error(ErrorCode::kInfeasibleStart, "target basis is infeasible");
  }
  trace.nonbasic = target_basis.complement(n);
  trace.kappa_hat = kappa_hat;
  trace.active_columns = support(trace.target).unite(support(x0));
  const Matrix ak = a.select_columns(trace.active_columns);
  trace.kernel_dimension = trace.active_columns.size() - rank(ak);

  const std::size_t m = rank(a);
  const std::size_t cap =
      cap_or(options.iteration_cap, default_walk_cap(m, n, kappa_hat));
  Vector x = x0;
  trace.sets.push_back(
      analysis_sets(x, trace.target, trace.nonbasic, n, m, kappa_hat));
  while (x != trace.target) {
    if (trace.steps.size() >= cap) {
      throw Error(ErrorCode::kIterationCap,
                  "diameter walk exceeded " + std::to_string(cap) + " steps");
    }
    const ConformalDecomposition d = conformal_decompose(
        ak, restrict(trace.target - x, trace.active_columns));
    std::optional<Vector> best;
    Rational best_norm;
    for (const auto& part : d.parts) {
      Vector h = embed(part.g, trace.active_columns, n);
      Rational weight = norm1(h, trace.nonbasic);
      if (!best || weight > best_norm) {
        best_norm = weight;
        best = std::move(h);
      }
    }
    Augmentation aug = augment_maximal(a, x, *best);
    if (aug.unbounded()) {
      throw Error(ErrorCode::kAssertionFailed,
                  "decomposition part gives an unbounded ray");
    }
    x = aug.x;
    trace.steps.push_back(WalkStep{ElementaryVector::from(std::move(*best)),
                                   *aug.step, OracleTag::kDecomposition, x, 1});
    trace.sets.push_back(
        analysis_sets(x, trace.target, trace.nonbasic, n, m, kappa_hat));
  }
  trace.reached_target = true;
  return trace;
}

TraceReport check_trace_lemmas(const WalkTrace& trace,
                               const Rational& kappa_hat) {
  TraceReport report;
  const std::size_t n = trace.a.cols();
  const std::size_t m = rank(trace.a);
  const IndexSet basis = trace.nonbasic.complement(n);
  const Rational k(static_cast<long>(trace.kernel_dimension));
  const auto& N = trace.nonbasic;

  auto sets_at = [&](std::size_t t) {
    return analysis_sets(trace.iterate(t), trace.target, N, n, m, kappa_hat);
  };
  auto check_proximity = [&](std::size_t t) {
    const Vector& x = trace.iterate(t);
    if (norm_inf(x - trace.target) > kappa_hat * norm1(x, N)) {
      add(report, t, "proximity", true,
          "||x - x*||_inf exceeds kappa ||x_N||_1");
    }
    DiameterAnalysisSets s = sets_at(t);
    if (!s.large.is_subset_of(support(x))) {
      add(report, t, "large_in_support", true,
          "L_t = " + s.large.to_string() + " not inside supp(x)");
    }
  };

  check_proximity(0);
  DiameterAnalysisSets prev = sets_at(0);
  if (!prev.large.is_subset_of(basis)) add(report, 0, "large_in_basis", false);
  for (std::size_t t = 0; t < trace.steps.size(); ++t) {
    const WalkStep& step = trace.steps[t];
    const Vector& x = trace.iterate(t);
    const Vector& next = step.iterate_after;
    const Vector& g = step.direction.g;
    if (!is_feasible(trace.a, trace.b, next, trace.u)) {
      add(report, t, "feasibility", false);
    }
    if (x + step.step * g != next) add(report, t, "linkage", false);
    if (!step_is_maximal(next, g, trace.u)) add(report, t, "maximality", false);
    if (step.oracle == OracleTag::kDecomposition) {
      if (step.step < 1) {
        add(report, t, "step_at_least_one", false, to_string(step.step));
      }
      const Rational before = norm1(x, N);
      const Rational after = norm1(next, N);
      if (sgn(k) == 0 || after > (1 - 1 / k) * before) {
        add(report, t, "decay", false,
            to_string(after) + " > (1 - 1/" + to_string(k) + ") * " +
                to_string(before));
      }
      for (Index i = 0; i < n; ++i) {
        if (abs(next[i] - x[i]) > k * abs(trace.target[i] - x[i])) {
          add(report, t, "movement", false, "coordinate " + std::to_string(i));
          break;
        }
      }
    }
    DiameterAnalysisSets cur = sets_at(t + 1);
    if (!prev.large.is_subset_of(cur.large)) {
      add(report, t, "large_monotone", false);
    }
    if (!cur.large.is_subset_of(basis)) add(report, t + 1, "large_in_basis", false);
    if (!prev.reached.is_subset_of(cur.reached)) {
      add(report, t, "reached_monotone", false);
    }
    check_proximity(t + 1);
    prev = std::move(cur);
  }
  const Vector& last = trace.iterate(trace.steps.size());
  if (!trace.reached_target || last != trace.target) {
    add(report, trace.steps.size(), "ends_at_target", false);
  }
  return report;
}

Vector partition_vertex(const Matrix& a, const Vector& b, const Bounds& u,
                        const Partition& p) {
  const std::size_t n = a.cols();
  if (p.basis.size() + p.lower.size() + p.upper.size() != n ||
      p.basis.unite(p.lower).unite(p.upper).size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "B, L, H must partition [n]");
  }
  Vector rhs = b;
  for (Index i : p.upper) {
    if (u[i].is_infinite()) {
      throw Error(ErrorCode::kInvalidArgument, "H index with infinite bound");
    }
    rhs = rhs - u[i].value() * a.column(i);
  }
  Vector xb = zeros(n);
  if (!p.basis.empty()) {
    auto sol = solve_square(a.select_columns(p.basis), rhs);
    if (!sol || p.basis.size() != a.rows()) {
      throw Error(ErrorCode::kSingularBasis, "A_B is not a basis");
    }
    xb = embed(*sol, p.basis, n);
  } else if (!is_zero(rhs)) {
    throw Error(ErrorCode::kInfeasibleStart, "target violates A x = b");
  }
  Vector x = xb;
  for (Index i : p.upper) x[i] = u[i].value();
  if (!is_feasible(a, b, x, u)) {
    throw Error(ErrorCode::kInfeasibleStart, "partition vertex violates bounds");
  }
  return x;
}

CapacitatedTrace capacitated_walk(const Matrix& a, const Vector& b,
                                  const Bounds& u, const Partition& partition,
                                  const Vector& x0, const Rational& kappa_hat,
                                  const CapacitatedOptions& options) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  require_length(x0, n, "walk start");
  if (u.size() != n) throw Error(ErrorCode::kDimensionMismatch, "bounds");
  const Vector target = partition_vertex(a, b, u, partition);
  if (!is_feasible(a, b, x0, u)) {
    throw Error(ErrorCode::kInfeasibleStart, "x0 is not in P_u");
  }
  for (Index i : partition.lower) {
    if (u[i].is_infinite()) {
      throw Error(ErrorCode::kInvalidArgument, "L index with infinite bound");
    }
  }

  CapacitatedTrace out;
  out.cost = zeros(n);
  for (Index i : partition.lower) out.cost[i] = 1 / u[i].value();
  for (Index i : partition.upper) out.cost[i] = -1 / u[i].value();
  WalkTrace& walk = out.walk;
  walk.a = a;
  walk.b = b;
  walk.u = u;
  walk.start = x0;
  walk.target = target;
  walk.nonbasic = partition.basis.complement(n);
  walk.kappa_hat = kappa_hat;
  walk.active_columns = IndexSet::range(n);
  walk.kernel_dimension = n - rank(a);

  const Rational optimum(-static_cast<long>(partition.upper.size()));
  const std::size_t lg =
      static_cast<std::size_t>(std::max(0L, ceil_log2(Rational(static_cast<long>(n)))));
  const std::size_t cap = cap_or(options.phase_one_cap,
                                 10 * (n - std::min(n, m)) * (lg + 1) + n);

  Vector x = x0;
  IndexSet s = unsettled(x, target, partition);
  while (s.size() > m) {
    if (walk.steps.size() >= cap) {
      throw Error(ErrorCode::kIterationCap, "capacitated phase one cap");
    }
    std::optional<Vector> g;
    Augmentation aug;
    OracleTag tag;
    if (dot(out.cost, x) >= optimum + 1) {
      tag = OracleTag::kDecomposition;
      ++out.decomposition_calls;
      ConformalDecomposition d = conformal_decompose(a, target - x);
      Rational best;
      for (const auto& part : d.parts) {
        Rational v = dot(out.cost, part.g);
        if (!g || v < best) {
          best = v;
          g = part.g;
        }
      }
      aug = augment_maximal(a, x, *g, u);
    } else {
      tag = OracleTag::kSupportCircuit;
      ++out.support_calls;
      std::vector<Index> free_idx;
      for (Index i = 0; i < n; ++i) {
        if (!at_bound(x[i], u[i])) free_idx.push_back(i);
      }
      const IndexSet free(free_idx);
      // Any circuit meeting S with <c,g> <= 0 is admissible; prefer one whose
      // maximal step lands an L ∪ H coordinate on its target bound.
      std::optional<std::pair<Vector, Augmentation>> fallback;
      for (Index j : s.intersect(free)) {
        auto found = circuit_through(a, free, j);
        if (!found) continue;
        Vector base = canonical_scaling(*found);
        const int sign = sgn(dot(out.cost, base));
        std::vector<Vector> options_here;
        if (sign <= 0) options_here.push_back(base);
        if (sign >= 0) options_here.push_back(-base);
        for (auto& cand : options_here) {
          Augmentation trial = augment_maximal(a, x, cand, u);
          if (trial.unbounded()) continue;
          bool settles = false;
          for (Index i : support(cand).intersect(s)) {
            if (trial.x[i] == target[i]) settles = true;
          }
          if (settles) {
            g = cand;
            aug = std::move(trial);
            break;
          }
          if (!fallback) fallback.emplace(cand, std::move(trial));
        }
        if (g) break;
      }
      if (!g && fallback) {
        g = fallback->first;
        aug = std::move(fallback->second);
      }
      if (!g) {
        throw Error(ErrorCode::kAssertionFailed,
                    "no support circuit among free coordinates meets S");
      }
    }
    if (aug.unbounded()) {
      throw Error(ErrorCode::kAssertionFailed, "unbounded step in P_u");
    }
    x = aug.x;
    walk.steps.push_back(
        WalkStep{ElementaryVector::from(std::move(*g)), *aug.step, tag, x, 1});
    s = unsettled(x, target, partition);
  }
  out.phase_one_steps = walk.steps.size();
  out.final_unsettled = s;

  // Phase two on [A_K 0; I I] over K = B ∪ S, finite bounds only.
  const IndexSet cols = partition.basis.unite(s);
  out.reformulated_columns = cols;
  std::vector<Index> fin_idx;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (u[cols[k]].is_finite()) fin_idx.push_back(k);
  }
  const std::size_t kk = cols.size(), f = fin_idx.size();
  Vector b2 = b;
  for (Index i : partition.upper.minus(cols)) b2 = b2 - u[i].value() * a.column(i);
  Matrix at(m + f, kk + f);
  Vector bt = zeros(m + f);
  Vector xt = zeros(kk + f);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < kk; ++k) at(r, k) = a(r, cols[k]);
    bt[r] = b2[r];
  }
  for (std::size_t k = 0; k < kk; ++k) xt[k] = x[cols[k]];
  for (std::size_t j = 0; j < f; ++j) {
    const std::size_t k = fin_idx[j];
    at(m + j, k) = 1;
    at(m + j, kk + j) = 1;
    bt[m + j] = u[cols[k]].value();
    xt[kk + j] = bt[m + j] - x[cols[k]];
  }
  std::vector<Index> basis_idx;
  for (std::size_t k = 0; k < kk; ++k) {
    const Index i = cols[k];
    if (partition.basis.contains(i) || partition.upper.contains(i)) {
      basis_idx.push_back(k);
    }
  }
  for (std::size_t j = 0; j < f; ++j) {
    if (!partition.upper.contains(cols[fin_idx[j]])) basis_idx.push_back(kk + j);
  }
  out.reformulated =
      diameter_walk(at, bt, IndexSet(basis_idx), xt, kappa_hat, options.phase_two);
  for (const WalkStep& inner : out.reformulated.steps) {
    Vector g = zeros(n);
    Vector next = x;
    for (std::size_t k = 0; k < kk; ++k) {
      g[cols[k]] = inner.direction.g[k];
      next[cols[k]] = inner.iterate_after[k];
    }
    x = next;
    walk.steps.push_back(WalkStep{ElementaryVector::from(std::move(g)),
                                  inner.step, inner.oracle, x, 2});
  }
  walk.reached_target = x == target;
  return out;
}

TraceReport check_capacitated_trace(const CapacitatedTrace& trace,
                                    const Partition& p) {
  TraceReport report;
  const WalkTrace& w = trace.walk;
  const std::size_t n = w.a.cols();
  const std::size_t m = w.a.rows();
  const Rational spread(static_cast<long>(n - std::min(n, m)));
  const Rational optimum(-static_cast<long>(p.upper.size()));
  std::size_t support_steps = 0;
  for (std::size_t t = 0; t < w.steps.size(); ++t) {
    const WalkStep& step = w.steps[t];
    const Vector& x = w.iterate(t);
    const Vector& next = step.iterate_after;
    if (!is_feasible(w.a, w.b, next, w.u)) add(report, t, "feasibility", false);
    if (x + step.step * step.direction.g != next) add(report, t, "linkage", false);
    if (!step_is_maximal(next, step.direction.g, w.u)) {
      add(report, t, "maximality", false);
    }
    if (step.phase != 1) continue;
    const Rational gap = dot(trace.cost, x) - optimum;
    const Rational gap_next = dot(trace.cost, next) - optimum;
    if (step.oracle == OracleTag::kDecomposition) {
      if (sgn(spread) == 0 || gap_next > (1 - 1 / spread) * gap) {
        add(report, t, "phase_one_decay", false,
            to_string(gap_next) + " vs " + to_string(gap));
      }
    } else {
      ++support_steps;
      if (gap_next > gap) add(report, t, "support_monotone", false);
      bool correct = false;
      for (Index i : p.lower) {
        if (sgn(x[i]) != 0 && sgn(next[i]) == 0) correct = true;
      }
      for (Index i : p.upper) {
        const Rational& ui = (*w.u)[i].value();
        if (x[i] != ui && next[i] == ui) correct = true;
      }
      if (!correct) add(report, t, "correct_bound", false);
    }
  }
  if (trace.final_unsettled.size() > m) add(report, trace.phase_one_steps, "phase_one_exit", false);
  if (support_steps > n) add(report, trace.phase_one_steps, "support_budget", false);
  const Vector& last = w.iterate(w.steps.size());
  if (!w.reached_target || last != w.target) {
    add(report, w.steps.size(), "ends_at_target", false);
  }
  return report;
}

}  // namespace circuitlp
