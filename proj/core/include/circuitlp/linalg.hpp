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

#ifndef CIRCUITLP_LINALG_HPP_
#define CIRCUITLP_LINALG_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "circuitlp/index_set.hpp"
#include "circuitlp/matrix.hpp"

namespace circuitlp {

// Reduced row echelon form computed with exact fractions. Pivot rows are
// chosen by smallest bit size among the candidates in the pivot column, which
// keeps coefficient growth down; the result does not depend on that choice.
struct Echelon {
  Matrix reduced;
  std::vector<Index> pivot_columns;  // increasing
  std::vector<Index> pivot_source_rows;  // original row of each pivot

  std::size_t rank() const { return pivot_columns.size(); }
};

Echelon row_reduce(Matrix m);

// rk(A_S).
std::size_t rank(const Matrix& a, const IndexSet& cols);
std::size_t rank(const Matrix& a);

// cl(S) = { i : rk(S + i) = rk(S) }.
IndexSet closure(const Matrix& a, const IndexSet& cols);

// Columns form a basis of ker(A); n - rk(A) columns.
Matrix kernel_basis(const Matrix& a);

// x with x_B = A_B^{-1} b and zeros elsewhere. Throws kSingularBasis when
// |B| != rows or A_B is singular.
Vector basic_solution(const Matrix& a, const Vector& b, const IndexSet& basis);

// Solution of M x = rhs for square nonsingular M, nullopt otherwise.
std::optional<Vector> solve_square(const Matrix& m, const Vector& rhs);

// Any solution of A x = b (free variables set to zero), nullopt when the
// system is inconsistent.
std::optional<Vector> solve_any(const Matrix& a, const Vector& b);

// Indices of a maximal linearly independent subset of the rows, lowest
// indices preferred.
IndexSet independent_rows(const Matrix& a);

// c - A^T (A A^T)^{-1} A c: orthogonal projection onto ker(A).
Vector project_to_kernel(const Matrix& a, const Vector& c);

// True when v lies in the row space Im(A^T).
bool in_row_space(const Matrix& a, const Vector& v);

// Returns (c * 2^k, 2^k) with ||c * 2^k||_2^2 in [1, 4).
std::pair<Vector, Rational> scale_to_unit_band(const Vector& c);

}  // namespace circuitlp

#endif  // CIRCUITLP_LINALG_HPP_
