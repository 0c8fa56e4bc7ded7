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


// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails. Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "../support/reference.hpp"
#include "circuitlp/circuits.hpp"
#include "circuitlp/error.hpp"
#include "circuitlp/feasibility.hpp"
#include "circuitlp/general_form.hpp"
#include "circuitlp/generators.hpp"
#include "circuitlp/linalg.hpp"
#include "circuitlp/optimize.hpp"
#include "circuitlp/simplex.hpp"
#include "circuitlp/variable_fixing.hpp"
#include "circuitlp/walks.hpp"

namespace circuitlp {
namespace {

using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kKappaDualitySeconds = 120;
constexpr double kDecompositionSeconds = 120;
constexpr double kWalkSeconds = 300;
constexpr long kCapFactor = 10;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records the first failure only; later ones would repeat its cause.
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

Rational num(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::string str(const Vector& v) { return to_string(v); }

Vector random_kernel_vector(Rng& rng, const Matrix& a) {
  Matrix k = kernel_basis(a);
  Vector x = zeros(a.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    x = x + Rational(static_cast<long>(rng() % 9) - 4) * k.column(j);
  }
  return x;
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

// A bounded LP whose A has one column scaled by `scale`; the imbalance of
// such matrices is far above n. nullopt when the drawn cost is unbounded.
struct ScaledLp {
  Matrix a;
  Vector b;
  Vector c;
  Vector start;
};

std::optional<ScaledLp> scaled_column_lp(std::uint64_t seed, long scale) {
  Rng rng(seed);
  const std::size_t n = 3 + rng() % 3;
  const std::size_t m = 1 + rng() % 2;
  ScaledLp lp{random_matrix(rng, m, n, 3), {}, Vector(n), Vector(n)};
  const std::size_t col = rng() % n;
  for (std::size_t i = 0; i < m; ++i) lp.a(i, col) *= scale;
  for (auto& v : lp.start) v = 1 + static_cast<long>(rng() % 3);
  lp.b = lp.a * lp.start;
  for (auto& v : lp.c) v = static_cast<long>(rng() % 2001) - 1000;
  if (simplex_solve(lp.a, lp.b, lp.c).status != LpStatus::kOptimal) return std::nullopt;
  return lp;
}

Rational optimum(const Matrix& a, const Vector& b, const Vector& c) {
  auto lp = simplex_solve(a, b, c);
  if (lp.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kAssertionFailed, "reference LP is not optimal");
  }
  return lp.objective;
}

// ---------------------------------------------------------------------------

void kappa_duality(Outcome& out) {
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; checked < 200; ++seed) {
    Rng rng(1000 + seed);
    const std::size_t n = uniform(rng, 2, 7);
    const std::size_t m = uniform(rng, 1, n - 1);
    Matrix a = random_matrix(rng, m, n, 4);
    ++checked;
    Rational primal = kappa_exact(a).value;
    Rational dual = kappa_dual(a).value;
    if (primal != dual) {
      out.fail("seed " + std::to_string(seed) + ": " + to_string(primal) +
               " vs " + to_string(dual));
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= kKappaDualitySeconds) out.fail("runtime " + std::to_string(secs));
  out.detail << checked << " matrices";
}

void decomposition(Outcome& out) {
  const auto start = Clock::now();
  std::size_t checked = 0;
  std::size_t parts_total = 0;
  for (std::uint64_t seed = 1; checked < 500; ++seed) {
    Rng rng(2000 + seed);
    const std::size_t n = uniform(rng, 3, 8);
    const std::size_t m = uniform(rng, 1, n - 2);
    Matrix a = random_matrix(rng, m, n, 3);
    if (reference::rank(a) != m) continue;
    Vector x = random_kernel_vector(rng, a);
    if (is_zero(x)) continue;
    ++checked;
    auto elementary = reference::elementary_vectors(a);
    std::set<Vector> circuits(elementary.begin(), elementary.end());
    auto d = conformal_decompose(a, x);
    Vector sum = zeros(n);
    for (const auto& p : d.parts) {
      sum = sum + p.g;
      if (!is_conformal(p.g, x)) out.fail("part not conformal: " + str(p.g));
      if (!circuits.count(reference::normalize(p.g))) {
        out.fail("part not elementary: " + str(p.g));
      }
    }
    if (sum != x) out.fail("parts do not sum to " + str(x));
    if (d.parts.size() > std::min(n - m, support(x).size())) {
      out.fail("too many parts for " + str(x));
    }
    parts_total += d.parts.size();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= kDecompositionSeconds) out.fail("runtime " + std::to_string(secs));
  out.detail << checked << " vectors, " << parts_total << " parts";
}

void ratio_optimality(Outcome& out) {
  std::size_t checked = 0;
  std::size_t circuits = 0;
  for (std::uint64_t seed = 1; checked < 200; ++seed) {
    Rng rng(3000 + seed);
    const std::size_t n = uniform(rng, 2, 7);
    const std::size_t m = uniform(rng, 1, n - 1);
    Matrix a = random_matrix(rng, m, n, 3);
    Vector c(n);
    for (auto& v : c) v = static_cast<long>(rng() % 9) - 4;
    Weights w;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 6 == 0) {
        w.push_back(ExtendedRational::infinity());
      } else {
        w.emplace_back(make_rational(1 + static_cast<long>(rng() % 9),
                                     1 + static_cast<long>(rng() % 4)));
      }
    }
    auto best = reference::min_ratio(a, c, w);
    if (!best) continue;  // the ratio LP itself is unbounded
    ++checked;
    auto r = ratio_circuit(a, c, w);
    const std::string tag = "seed " + std::to_string(seed);
    if (!is_valid_dual(a, c, w, r.dual)) out.fail(tag + ": invalid dual");
    if (r.status == RatioStatus::kZero) {
      if (*best != 0) out.fail(tag + ": Zero but brute force " + to_string(*best));
      if (r.dual.lambda != 0) out.fail(tag + ": Zero with lambda != 0");
      continue;
    }
    ++circuits;
    const Vector& g = r.g->g;
    const Rational neg = weighted_negative_part(w, g);
    if (!is_elementary(a, g)) out.fail(tag + ": not elementary");
    if (neg == 0) {
      out.fail(tag + ": <w, g-> = 0");
      continue;
    }
    const Rational ratio = dot(c, g) / neg;
    if (ratio != *best) {
      out.fail(tag + ": ratio " + to_string(ratio) + " vs " + to_string(*best));
    }
    if (dot(c, g) != -r.dual.lambda) out.fail(tag + ": <c,g> != -lambda");
  }
  out.detail << checked << " instances, " << circuits << " with a circuit";
}

// Gap decay of one ratio step for min <c, x> over {A x = b, x >= 0}.
void check_decay(Outcome& out, const std::string& tag, const Vector& c,
                 const Rational& opt, const SolverStep& s) {
  const Rational gap_before = dot(c, s.x_before) - opt;
  const Rational gap_after = dot(c, s.x_after) - opt;
  const Rational k = num(support(s.x_before).size());
  if (gap_after > (1 - 1 / k) * gap_before) {
    out.fail(tag + " iteration " + std::to_string(s.iteration) + ": gap " +
             to_string(gap_before) + " -> " + to_string(gap_after));
  }
  if (s.step < 1) out.fail(tag + ": step below one");
}

void decay_on_traces(Outcome& out) {
  std::size_t steps = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(4000 + seed);
    const std::size_t n = uniform(rng, 4, 8);
    const std::size_t m = uniform(rng, 1, 3);
    auto inst = generate_feasibility_instance(n, m, seed % 2 == 0, 4000 + seed);
    Vector c = zeros(inst.a.cols());
    for (Index j : inst.zero_set) c[j] = 1;
    const Rational opt = optimum(inst.a, inst.b, c);
    auto run = feasibility_auto(inst.a, inst.b, inst.zero_set, inst.start);
    for (const auto& s : run.result.steps) {
      if (s.oracle != OracleTag::kRatioCircuit) continue;
      check_decay(out, "feasibility seed " + std::to_string(seed), c, opt, s);
      ++steps;
    }
  }
  std::vector<ScaledLp> lps;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(4500 + seed);
    const std::size_t n = uniform(rng, 4, 8);
    const std::size_t m = uniform(rng, 1, std::min<std::size_t>(3, n - 2));
    auto lp = generate_solvable_lp(n, m, 4500 + seed);
    lps.push_back({lp.instance.a, lp.instance.b, lp.instance.c, lp.start});
  }
  for (std::uint64_t seed = 1; lps.size() < 100; ++seed) {
    if (auto lp = scaled_column_lp(4600 + seed, 1000)) lps.push_back(*lp);
  }
  for (std::size_t idx = 0; idx < lps.size(); ++idx) {
    const ScaledLp& inst = lps[idx];
    const std::uint64_t seed = idx;
    auto run = optimize_auto(inst.a, inst.b, inst.c, inst.start);
    for (const auto& round : run.result.rounds) {
      const Matrix sub = inst.a.select_columns(round.columns);
      const auto& fo = round.outcome;
      std::vector<Rational> opts;
      for (const auto& ph : fo.phases) opts.push_back(optimum(sub, inst.b, ph.cost));
      for (const auto& s : fo.steps) {
        if (s.oracle != OracleTag::kRatioCircuit) continue;
        const std::size_t k = s.phase - 1;
        check_decay(out, "fixing seed " + std::to_string(seed),
                    fo.phases[k].cost, opts[k], s);
        ++steps;
      }
    }
  }
  if (steps == 0) out.fail("no ratio steps observed");
  out.detail << steps << " ratio steps";
}

// Independent recomputation of the diameter-walk lemmas with exact kappa.
void check_walk(Outcome& out, const std::string& tag, const GeneratedInstance& g,
                const Rational& kappa, const WalkTrace& t) {
  const std::size_t n = g.instance.n();
  const std::size_t m = g.instance.m();
  const IndexSet nonbasic = g.target_basis.complement(n);
  const Vector& target = g.target;
  auto large_set = [&](const Vector& x) {
    const Rational threshold = num(n) * kappa * norm1(x, nonbasic);
    std::vector<Index> out_set;
    for (Index i = 0; i < n; ++i) {
      if (target[i] > threshold) out_set.push_back(i);
    }
    return IndexSet(out_set);
  };
  auto reached_set = [&](const Vector& x) {
    std::vector<Index> out_set;
    for (Index i = 0; i < n; ++i) {
      if (x[i] <= num(n - m) * target[i]) out_set.push_back(i);
    }
    return IndexSet(out_set);
  };
  if (!t.reached_target || t.iterate(t.steps.size()) != target) {
    out.fail(tag + ": walk does not end at the target");
  }
  for (std::size_t s = 0; s < t.steps.size(); ++s) {
    const Vector& x = t.iterate(s);
    const Vector& y = t.iterate(s + 1);
    const std::string at = tag + " step " + std::to_string(s);
    if (!is_feasible(g.instance.a, g.instance.b, y)) out.fail(at + ": infeasible");
    if (y != x + t.steps[s].step * t.steps[s].direction.g) out.fail(at + ": linkage");
    if (!reference::is_circuit(g.instance.a, t.steps[s].direction.circuit)) {
      out.fail(at + ": direction is not a circuit");
    }
    if (norm1(y, nonbasic) > (1 - 1 / num(n - m)) * norm1(x, nonbasic)) {
      out.fail(at + ": no geometric decay of ||x_N||_1");
    }
    for (Index i = 0; i < n; ++i) {
      if (abs(y[i] - x[i]) > num(n - m) * abs(target[i] - x[i])) {
        out.fail(at + ": coordinate " + std::to_string(i) + " moved too far");
      }
    }
    IndexSet lx = large_set(x), ly = large_set(y);
    if (!lx.is_subset_of(ly) || !ly.is_subset_of(g.target_basis)) {
      out.fail(at + ": L_t not monotone inside B");
    }
    if (!reached_set(x).is_subset_of(reached_set(y))) out.fail(at + ": R_t not monotone");
  }
  const std::size_t bound = static_cast<std::size_t>(kCapFactor) * m *
                            std::min(m, n - m) *
                            static_cast<std::size_t>(floor_log2(num(m) + kappa) + 1);
  if (t.steps.size() > bound) {
    out.fail(tag + ": length " + std::to_string(t.steps.size()) + " > " +
             std::to_string(bound));
  }
  auto report = check_trace_lemmas(t, kappa);
  if (!report.ok()) {
    out.fail(tag + ": checker reports " + report.first()->check + " (" +
             report.first()->detail + ")");
  }
}

void diameter_walks(Outcome& out) {
  const auto start = Clock::now();
  std::size_t total_steps = 0;
  std::size_t longest = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(5000 + seed);
    const std::size_t n = uniform(rng, 5, 10);
    const std::size_t m = uniform(rng, 2, std::min<std::size_t>(4, n - 2));
    const InstanceKind kind =
        seed % 2 == 0 ? InstanceKind::kTotallyUnimodular : InstanceKind::kGeneric;
    auto g = generate_instance(kind, n, m, 5000 + seed);
    const Rational kappa = kappa_exact(g.instance.a).value;
    if (kind == InstanceKind::kTotallyUnimodular && kappa != 1) {
      out.fail("TU instance with kappa " + to_string(kappa));
    }
    auto t = diameter_walk(g.instance.a, g.instance.b, g.target_basis, g.start, kappa);
    check_walk(out, std::string(to_string(kind)) + " seed " + std::to_string(seed), g,
               kappa, t);
    total_steps += t.steps.size();
    longest = std::max(longest, t.steps.size());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= kWalkSeconds) out.fail("runtime " + std::to_string(secs));
  out.detail << "100 walks, " << total_steps << " steps, longest " << longest;
}

void capacitated_walks(Outcome& out) {
  std::size_t support_steps = 0;
  std::size_t phase_one = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(6000 + seed);
    const std::size_t n = uniform(rng, 4, 8);
    const std::size_t m = uniform(rng, 1, std::min<std::size_t>(3, n - 2));
    auto g = generate_instance(InstanceKind::kCapacitated, n, m, 6000 + seed);
    const auto& inst = g.instance;
    const Bounds& u = *inst.u;
    const Partition& p = *g.partition;
    const Rational kappa = kappa_exact(inst.a).value;
    const std::string tag = "seed " + std::to_string(6000 + seed);
    auto t = capacitated_walk(inst.a, inst.b, u, p, g.start, kappa);
    if (t.final_unsettled.size() > m) out.fail(tag + ": |S_t| > m after phase one");
    if (t.support_calls > n) out.fail(tag + ": support budget exceeded");
    for (std::size_t s = 0; s < t.walk.steps.size(); ++s) {
      const Vector& x = t.walk.iterate(s);
      const Vector& y = t.walk.iterate(s + 1);
      if (!is_feasible(inst.a, inst.b, y, u)) out.fail(tag + ": infeasible iterate");
      if (s >= t.phase_one_steps) continue;
      ++phase_one;
      if (t.walk.steps[s].oracle != OracleTag::kSupportCircuit) continue;
      ++support_steps;
      bool settled = false;
      for (Index i : p.lower) settled |= x[i] != 0 && y[i] == 0;
      for (Index i : p.upper) settled |= x[i] != u[i].value() && y[i] == u[i].value();
      if (!settled) {
        out.fail(tag + " step " + std::to_string(s) +
                 ": support step leaves every L/H variable off its target bound");
      }
    }
    if (!t.walk.reached_target || t.walk.iterate(t.walk.steps.size()) != g.target) {
      out.fail(tag + ": composed walk does not end at x*");
    }
    auto report = check_capacitated_trace(t, p);
    if (!report.ok()) {
      out.fail(tag + ": checker reports " + report.first()->check + " at " +
               std::to_string(report.first()->iteration) + " (" +
               report.first()->detail + ")");
    }
  }
  out.detail << "50 walks, " << phase_one << " phase-one steps, " << support_steps
             << " support steps";
}

void feasibility_algorithm(Outcome& out) {
  std::size_t feasible = 0;
  std::size_t max_ratio = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(7000 + seed);
    const std::size_t n = uniform(rng, 4, 8);
    const std::size_t m = uniform(rng, 1, 3);
    const bool want = seed <= 50;
    auto inst = generate_feasibility_instance(n, m, want, 7000 + seed);
    const std::string tag = "seed " + std::to_string(7000 + seed);
    Vector c = zeros(inst.a.cols());
    for (Index j : inst.zero_set) c[j] = 1;
    const bool truth = optimum(inst.a, inst.b, c) == 0;
    if (truth != want) out.fail(tag + ": generator produced the wrong kind");
    feasible += truth ? 1 : 0;
    auto run = feasibility_auto(inst.a, inst.b, inst.zero_set, inst.start);
    const auto& r = run.result;
    if (r.found() != truth) {
      out.fail(tag + ": wrong answer");
      continue;
    }
    if (r.found()) {
      if (!is_feasible(inst.a, inst.b, *r.x)) out.fail(tag + ": x infeasible");
      for (Index j : inst.zero_set) {
        if ((*r.x)[j] != 0) out.fail(tag + ": x_N != 0");
      }
    } else {
      const DualCertificate& cert = *r.certificate;
      if (cert.s != c + inst.a.transpose() * cert.y) out.fail(tag + ": s != c + A^T y");
      if (!is_nonnegative(cert.s)) out.fail(tag + ": s has a negative entry");
      if (dot(inst.b, cert.standard_y()) <= 0) out.fail(tag + ": certificate value <= 0");
    }
    const std::size_t mm = reference::rank(inst.a);
    const std::size_t nn = inst.a.cols();
    const std::size_t ratio_bound =
        static_cast<std::size_t>(kCapFactor) * mm * nn *
        static_cast<std::size_t>(floor_log2(num(nn) + run.kappa_hat) + 1);
    if (r.calls.ratio > ratio_bound) {
      out.fail(tag + ": " + std::to_string(r.calls.ratio) + " ratio calls > " +
               std::to_string(ratio_bound));
    }
    if (r.calls.support > (mm + 1) * nn) out.fail(tag + ": support calls over budget");
    max_ratio = std::max(max_ratio, r.calls.ratio);
  }
  out.detail << "100 instances, " << feasible << " feasible, max ratio calls "
             << max_ratio;
}

// True when x_j = 0 on the whole optimal face of min <c,x> over P.
bool vanishes_on_optimal_face(const Matrix& a, const Vector& b, const Vector& c,
                              const Rational& opt, Index j) {
  Matrix face(a.rows() + 1, a.cols());
  Vector rhs = b;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) face(i, k) = a(i, k);
  }
  for (std::size_t k = 0; k < a.cols(); ++k) face(a.rows(), k) = c[k];
  rhs.push_back(opt);
  auto lp = simplex_solve(face, rhs, -unit_vector(a.cols(), j));
  return lp.status == LpStatus::kOptimal && lp.objective == 0;
}

void variable_fixing_optimizer(Outcome& out) {
  std::size_t fixed_total = 0;
  std::size_t max_phases = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(8000 + seed);
    const std::size_t n = uniform(rng, 3, 8);
    const std::size_t m = uniform(rng, 1, std::min<std::size_t>(3, n - 1));
    auto lp = generate_solvable_lp(n, m, 8000 + seed);
    const auto& inst = lp.instance;
    const std::string tag = "seed " + std::to_string(8000 + seed);
    const Rational opt = optimum(inst.a, inst.b, inst.c);
    auto run = optimize_auto(inst.a, inst.b, inst.c, lp.start);
    const auto& r = run.result;
    if (r.status != LpStatus::kOptimal) {
      out.fail(tag + ": not optimal");
      continue;
    }
    if (!is_feasible(inst.a, inst.b, r.x)) out.fail(tag + ": x infeasible");
    if (r.objective != opt || dot(inst.c, r.x) != opt) {
      out.fail(tag + ": objective " + to_string(r.objective) + " vs " + to_string(opt));
    }
    for (const auto& round : r.rounds) {
      const auto& fo = round.outcome;
      max_phases = std::max(max_phases, fo.phases.size());
      if (fo.phases.size() > round.params.m + 1) out.fail(tag + ": more than m+1 phases");
      for (const auto& ph : fo.phases) {
        if (ph.ratio_calls > round.params.phase_ratio_cap) {
          out.fail(tag + ": phase exceeds T ratio calls");
        }
      }
      for (Index j : round.fixed) {
        ++fixed_total;
        auto forced = simplex_solve(inst.a, inst.b - inst.a.column(j), inst.c);
        const bool worse = forced.status == LpStatus::kInfeasible ||
                           (forced.status == LpStatus::kOptimal &&
                            forced.objective + inst.c[j] > opt);
        if (!worse) out.fail(tag + ": forcing x_" + std::to_string(j) + " >= 1 keeps OPT");
        if (!vanishes_on_optimal_face(inst.a, inst.b, inst.c, opt, j)) {
          out.fail(tag + ": x_" + std::to_string(j) + " positive on the optimal face");
        }
      }
    }
  }
  out.detail << "100 LPs, " << fixed_total << " fixed indices, max phases " << max_phases;
}

// First seed of the scaled-column family that needs a second estimate; the
// scan continues past it so a change in the solver cannot hide the check.
constexpr std::uint64_t kDoublingSeed = 4492;

void kappa_doubling(Outcome& out) {
  for (std::uint64_t seed = kDoublingSeed; seed < kDoublingSeed + 20000; ++seed) {
    auto lp = scaled_column_lp(seed, 1000);
    if (!lp) continue;
    const ScaledLp& inst = *lp;
    const std::size_t n = inst.a.cols();
    const Rational kappa = kappa_exact(inst.a).value;
    if (kappa <= num(n)) continue;
    auto run = optimize_auto(inst.a, inst.b, inst.c, inst.start);
    if (run.attempts.size() < 2) continue;
    const std::string tag = "seed " + std::to_string(seed);
    std::size_t total = 0;
    for (const auto& a : run.attempts) total += a.calls.total();
    const std::size_t last = run.attempts.back().calls.total();
    if (!run.attempts.back().succeeded) out.fail(tag + ": last attempt did not succeed");
    if (run.attempts.front().kappa_hat != num(n)) out.fail(tag + ": did not start at n");
    for (std::size_t k = 1; k < run.attempts.size(); ++k) {
      const Rational& prev = run.attempts[k - 1].kappa_hat;
      if (run.attempts[k].kappa_hat != prev * prev) out.fail(tag + ": estimate not squared");
    }
    if (2 * last < total) {
      out.fail(tag + ": last run " + std::to_string(last) + " of " + std::to_string(total));
    }
    if (run.result.objective != optimum(inst.a, inst.b, inst.c)) {
      out.fail(tag + ": wrong objective");
    }
    for (const auto& round : run.result.rounds) {
      if (round.params.kappa_hat != run.kappa_hat) out.fail(tag + ": stale estimate");
      if (round.outcome.phases.size() > round.params.m + 1) out.fail(tag + ": phases");
      for (const auto& ph : round.outcome.phases) {
        if (ph.ratio_calls > round.params.phase_ratio_cap) out.fail(tag + ": T exceeded");
        if (ph.support_calls > round.params.n) out.fail(tag + ": support exceeded");
      }
    }
    out.detail << tag << ", kappa " << to_string(kappa) << ", " << run.attempts.size()
               << " runs, estimate " << to_string(run.kappa_hat) << ", last run "
               << last << " of " << total << " calls";
    return;
  }
  out.fail("no seeded instance forced a doubling");
}

IndexSet zeros_of(const Vector& v) {
  std::vector<Index> out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) out.push_back(i);
  }
  return IndexSet(out);
}

IndexSet binding(const GeneralFormSystem& sys, const Vector& x) {
  return zeros_of(sys.d - sys.b_ineq * x);
}

void general_form(Outcome& out) {
  std::size_t vertices = 0;
  std::size_t augmentations = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(10000 + seed);
    const std::size_t n = uniform(rng, 2, 4);
    const std::size_t ma = uniform(rng, 0, std::min<std::size_t>(1, n - 1));
    const std::size_t mb = uniform(rng, n - ma + 1, 7);
    GeneralFormSystem sys = generate_general_form(n, ma, mb, 10000 + seed);
    const std::string tag = "seed " + std::to_string(10000 + seed);
    auto red = general_form_reduce(sys);
    const LpInstance& q = red.standard();
    const auto elementary = reference::elementary_vectors(q.a);
    std::set<Vector> seen;
    for (int draw = 0; draw < 4; ++draw) {
      Vector cost(q.n());
      for (auto& v : cost) v = 1 + static_cast<long>(rng() % 5);
      auto lp = simplex_solve(q.a, q.b, cost);
      if (lp.status != LpStatus::kOptimal) {
        out.fail(tag + ": Q has no vertex");
        break;
      }
      const Vector& s = *lp.x;
      if (!seen.insert(s).second) continue;
      ++vertices;
      const Vector x = red.psi(s);
      if (!is_feasible(sys, x)) out.fail(tag + ": psi(s) not in P");
      if (red.project(x) != s) out.fail(tag + ": project(psi(s)) != s");
      if (red.psi(red.project(x)) != x) out.fail(tag + ": psi(project(x)) != x");
      if (binding(sys, x) != zeros_of(s)) out.fail(tag + ": vertex binding sets differ");
      for (const Vector& h0 : elementary) {
        for (int o = 0; o < 2; ++o) {
          const Vector h = o == 0 ? h0 : Vector(-h0);
          const Vector g = red.lift_direction(h);
          auto in_q = augment_maximal(q.a, s, h);
          auto in_p = augment_general(sys, x, g);
          if (in_q.unbounded() != in_p.unbounded()) {
            out.fail(tag + ": boundedness differs");
            continue;
          }
          if (in_q.unbounded()) continue;
          ++augmentations;
          if (*in_q.step != *in_p.step) out.fail(tag + ": step sizes differ");
          if (red.psi(in_q.x) != in_p.x) out.fail(tag + ": psi(s') != x'");
          if (binding(sys, in_p.x) != zeros_of(in_q.x)) {
            out.fail(tag + ": binding constraints differ after augmentation");
          }
          // Maximal in P: some constraint newly binds in the direction g.
          bool blocked = false;
          const Vector bg = sys.b_ineq * g;
          for (Index i : binding(sys, in_p.x)) blocked |= bg[i] > 0;
          if (!blocked) out.fail(tag + ": augmentation in P not maximal");
        }
      }
    }
  }
  out.detail << "50 systems, " << vertices << " vertices, " << augmentations
             << " augmentations";
}

}  // namespace
}  // namespace circuitlp

int main() {
  using circuitlp::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {1, "kappa duality", circuitlp::kappa_duality},
      {2, "conformal decomposition", circuitlp::decomposition},
      {3, "ratio-circuit optimality", circuitlp::ratio_optimality},
      {4, "ratio-step decay on solver traces", circuitlp::decay_on_traces},
      {5, "diameter walks", circuitlp::diameter_walks},
      {6, "capacitated walks", circuitlp::capacitated_walks},
      {7, "feasibility algorithm", circuitlp::feasibility_algorithm},
      {8, "variable-fixing optimizer", circuitlp::variable_fixing_optimizer},
      {9, "kappa doubling", circuitlp::kappa_doubling},
      {10, "general-form reduction", circuitlp::general_form},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = circuitlp::Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(circuitlp::Clock::now() - start).count();
    std::printf("%s %2d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.str().c_str(), secs);
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
