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

#ifndef CIRCUITLP_WALKS_HPP_
#define CIRCUITLP_WALKS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circuitlp/circuits.hpp"
#include "circuitlp/lp_instance.hpp"

namespace circuitlp {

enum class OracleTag { kDecomposition, kSupportCircuit, kRatioCircuit };

const char* to_string(OracleTag tag);

struct WalkStep {
  ElementaryVector direction;
  Rational step;
  OracleTag oracle = OracleTag::kDecomposition;
  Vector iterate_after;
  int phase = 1;
};

// L_t, T_t = [n] \ L_t and R_t for one iterate of the shoot-towards-target
// walk.
struct DiameterAnalysisSets {
  IndexSet large;
  IndexSet rest;
  IndexSet reached;
};

struct WalkTrace {
  Matrix a;
  Vector b;
  std::optional<Bounds> u;
  Vector start;
  Vector target;
  IndexSet nonbasic;  // N = [n] \ B
  Rational kappa_hat;
  // Columns kept after dropping everything outside supp(x*) ∪ supp(x0).
  IndexSet active_columns;
  // dim ker(A restricted to the active columns): bounds the number of parts
  // in every decomposition, hence the per-step decay and movement factors.
  std::size_t kernel_dimension = 0;
  std::vector<WalkStep> steps;
  std::vector<DiameterAnalysisSets> sets;  // one per iterate, steps + 1
  bool reached_target = false;

  const Vector& iterate(std::size_t t) const {
    return t == 0 ? start : steps[t - 1].iterate_after;
  }
};

struct WalkOptions {
  // Defaults to 10 m min{m, n-m} (ceil(log2(m + kappa_hat)) + 1).
  std::optional<std::size_t> iteration_cap;
};

std::size_t default_walk_cap(std::size_t m, std::size_t n,
                             const Rational& kappa_hat);

DiameterAnalysisSets analysis_sets(const Vector& x, const Vector& target,
                                   const IndexSet& nonbasic,
                                   std::size_t n, std::size_t m,
                                   const Rational& kappa_hat);

// Circuit walk from x0 to the vertex of `target_basis`: each step takes the
// part of a conformal decomposition of x* - x with the largest ||h_N||_1 and
// augments maximally. Throws kInfeasibleStart, kSingularBasis or
// kIterationCap.
WalkTrace diameter_walk(const Matrix& a, const Vector& b,
                        const IndexSet& target_basis, const Vector& x0,
                        const Rational& kappa_hat,
                        const WalkOptions& options = {});

struct LemmaViolation {
  std::size_t iteration = 0;
  std::string check;
  // Violations of checks that use the estimate are diagnostics when the
  // estimate is below the true imbalance; everything else is a bug.
  bool kappa_dependent = false;
  std::string detail;
};

struct TraceReport {
  std::vector<LemmaViolation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t structural_violations() const;
  const LemmaViolation* first() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

// Replays a diameter_walk trace and checks, exactly and per step: iterate
// feasibility and linkage, maximality, alpha >= 1, the geometric decay of
// ||x_N||_1, the per-coordinate movement bound, L_t ⊆ L_{t+1} ⊆ B,
// R_t ⊆ R_{t+1}, and the proximity bound ||x - x*||_inf <= kappa ||x_N||_1.
TraceReport check_trace_lemmas(const WalkTrace& trace, const Rational& kappa_hat);

struct Partition {
  IndexSet basis;
  IndexSet lower;
  IndexSet upper;
};

struct CapacitatedTrace {
  WalkTrace walk;            // both phases, in x-space
  Vector cost;               // 0 on B, 1/u on L, -1/u on H
  std::size_t phase_one_steps = 0;
  std::size_t support_calls = 0;
  std::size_t decomposition_calls = 0;
  IndexSet final_unsettled;  // S_t when phase one stops
  WalkTrace reformulated;    // the phase-two walk on [A_K 0; I I]
  IndexSet reformulated_columns;  // K = B ∪ S_t
};

struct CapacitatedOptions {
  // Defaults to 10 (n-m) (ceil(log2 n) + 1) + n phase-one steps.
  std::optional<std::size_t> phase_one_cap;
  WalkOptions phase_two;
};

// Two-phase walk in {A x = b, 0 <= x <= u} towards x* = (A_B^{-1} b', 0_L,
// u_H). Phase one settles all but m of the L ∪ H coordinates at their target
// bounds; phase two runs diameter_walk on the reformulated system over
// B ∪ S_t.
CapacitatedTrace capacitated_walk(const Matrix& a, const Vector& b,
                                  const Bounds& u, const Partition& partition,
                                  const Vector& x0, const Rational& kappa_hat,
                                  const CapacitatedOptions& options = {});

// Checks a capacitated trace: bounds feasibility, the phase-one decay of
// <c,x> + |H| on decomposition steps, that every low-gap Support-Circuit step
// puts an L ∪ H coordinate at its target bound, the phase-one exit condition
// and budget, and that the walk ends at x*. Phase two is checked separately
// with check_trace_lemmas on `reformulated`.
TraceReport check_capacitated_trace(const CapacitatedTrace& trace,
                                    const Partition& partition);

// Target vertex of a partition, or kInfeasibleStart when it violates bounds.
Vector partition_vertex(const Matrix& a, const Vector& b, const Bounds& u,
                        const Partition& partition);

}  // namespace circuitlp

#endif  // CIRCUITLP_WALKS_HPP_
