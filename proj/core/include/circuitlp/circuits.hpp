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

#ifndef CIRCUITLP_CIRCUITS_HPP_
#define CIRCUITLP_CIRCUITS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "circuitlp/index_set.hpp"
#include "circuitlp/matrix.hpp"

namespace circuitlp {

// A support-minimal nonzero vector of ker(A). `circuit` is its support.
struct ElementaryVector {
  Vector g;
  IndexSet circuit;

  static ElementaryVector from(Vector g) {
    IndexSet s = support(g);
    return {std::move(g), std::move(s)};
  }

  friend bool operator==(const ElementaryVector&,
                         const ElementaryVector&) = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 14;

// Rank test: g in ker(A), g != 0, rk(A_C) = |C| - 1 and every C \ {i} is
// independent.
bool is_elementary(const Matrix& a, const Vector& g);

// Scales g to coprime integers with the first nonzero entry positive.
Vector canonical_scaling(const Vector& g);

// max |g_j / g_i| over i, j in supp(g).
Rational imbalance(const Vector& g);

// Elementary vector supported inside `within` whose support contains `s`,
// or nullopt when column s is independent of the other columns of `within`.
std::optional<Vector> circuit_through(const Matrix& a, const IndexSet& within,
                                      Index s);

// Some elementary vector supported inside `within` (the fundamental circuit
// of the first dependent column), or nullopt when those columns are
// independent.
std::optional<Vector> find_circuit(const Matrix& a, const IndexSet& within);

// One canonically scaled representative per circuit of the linear matroid
// of A, ordered by support size, then lexicographically. Exponential; throws
// kTooLarge for n > max_columns.
std::vector<ElementaryVector> enumerate_elementary_vectors(
    const Matrix& a, std::size_t max_columns = kDefaultEnumerationCap);

struct KappaEstimate {
  Rational value;
  bool exact = false;
};

// Circuit imbalance of ker(A) by enumeration (1 for a trivial kernel).
KappaEstimate kappa_exact(const Matrix& a,
                          std::size_t max_columns = kDefaultEnumerationCap);

// Circuit imbalance of Im(A^T), via the elementary vectors of ker(B) where
// the rows of B span ker(A).
KappaEstimate kappa_dual(const Matrix& a,
                         std::size_t max_columns = kDefaultEnumerationCap);

struct ConformalDecomposition {
  Vector target;
  std::vector<ElementaryVector> parts;
};

// Elementary vector h with supp(h) ⊆ supp(r) that is sign compatible with r.
// r must be a nonzero vector of ker(A).
Vector sign_compatible_circuit(const Matrix& a, const Vector& r);

// Conformal circuit decomposition x = sum of parts, each part ⊑ x. Every
// round peels one sign-compatible circuit at the largest feasible multiple,
// zeroing at least one residual coordinate and dropping the dimension of
// the kernel restricted to the residual support, so the part count is at
// most min(dim ker A, |supp x|). Throws kNotInKernel if A x != 0.
ConformalDecomposition conformal_decompose(const Matrix& a, const Vector& x);

}  // namespace circuitlp

#endif  // CIRCUITLP_CIRCUITS_HPP_
