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

#ifndef CIRCUITLP_GENERATORS_HPP_
#define CIRCUITLP_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "circuitlp/general_form.hpp"
#include "circuitlp/lp_instance.hpp"
#include "circuitlp/walks.hpp"

namespace circuitlp {

enum class InstanceKind { kGeneric, kTotallyUnimodular, kCapacitated };

const char* to_string(InstanceKind kind);
std::optional<InstanceKind> parse_instance_kind(std::string_view text);

using Rng = std::mt19937_64;

// Uniform integer entries in [-bound, bound].
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

// Node-arc incidence matrix of a random connected digraph on m + 1 nodes
// with n arcs, last node row dropped. Requires n >= m.
Matrix random_incidence_matrix(Rng& rng, std::size_t m, std::size_t n);

struct GeneratedInstance {
  LpInstance instance;
  Vector start;           // a vertex
  IndexSet target_basis;  // a different feasible basis
  Vector target;
  std::optional<Partition> partition;  // capacitated kind only
};

// Deterministic in (kind, n, m, seed). Throws kGenerationFailed after the
// retry cap and kInvalidArgument unless n > m >= 1.
GeneratedInstance generate_instance(InstanceKind kind, std::size_t n,
                                    std::size_t m, std::uint64_t seed);

// LP with a finite optimum and a strictly positive feasible start.
struct SolvableLp {
  LpInstance instance;
  Vector start;
};

SolvableLp generate_solvable_lp(std::size_t n, std::size_t m,
                                std::uint64_t seed);

// {A x = b, x >= 0} with cost 1 on `zero_set`; `start` is feasible.
// `feasible` records whether some feasible x has x_N = 0.
struct FeasibilityInstance {
  Matrix a;
  Vector b;
  IndexSet zero_set;
  Vector start;
  bool feasible = false;
};

// Auxiliary-program instances over a random m x (n/2) system, feasible or
// not as requested (checked with the reference simplex).
FeasibilityInstance generate_feasibility_instance(std::size_t n, std::size_t m,
                                                  bool feasible,
                                                  std::uint64_t seed);

// Pointed {A x = b, B x <= d} in R^n with ma equalities and mb > n - ma
// inequalities, nonempty by construction.
GeneralFormSystem generate_general_form(std::size_t n, std::size_t ma,
                                        std::size_t mb, std::uint64_t seed);

}  // namespace circuitlp

#endif  // CIRCUITLP_GENERATORS_HPP_
