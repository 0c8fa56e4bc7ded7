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

#ifndef CIRCUITLP_MATRIX_HPP_
#define CIRCUITLP_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "circuitlp/index_set.hpp"
#include "circuitlp/rational.hpp"

namespace circuitlp {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals. Dimensions are fixed at
// construction. Zero-sized matrices are allowed for intermediate results
// (an empty kernel basis, a system whose rows all turned out redundant);
// LpInstance enforces m, n >= 1 at the boundary.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols,
                             std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix select_columns(const IndexSet& cols) const;
  Matrix select_rows(const IndexSet& rows) const;
  Matrix transpose() const;

  Vector operator*(const Vector& x) const;
  Matrix operator*(const Matrix& other) const;

  // [this other] and [this; other].
  Matrix hcat(const Matrix& other) const;
  Matrix vcat(const Matrix& other) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector zeros(std::size_t n);
Vector ones(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);

Rational norm1(const Vector& v);
Rational norm_inf(const Vector& v);
Rational norm2_squared(const Vector& v);
Rational norm1(const Vector& v, const IndexSet& on);

bool is_zero(const Vector& v);
bool is_nonnegative(const Vector& v);
IndexSet support(const Vector& v);

Vector positive_part(const Vector& v);
Vector negative_part(const Vector& v);

// v restricted to the listed coordinates, in order.
Vector restrict(const Vector& v, const IndexSet& on);
// Inverse of restrict: scatter into a length-n zero vector.
Vector embed(const Vector& v, const IndexSet& on, std::size_t n);

// x ⊑ y: sign compatible and |x_i| <= |y_i|.
bool is_conformal(const Vector& x, const Vector& y);
bool sign_compatible(const Vector& x, const Vector& y);

std::string to_string(const Vector& v, char sep = ' ');

}  // namespace circuitlp

#endif  // CIRCUITLP_MATRIX_HPP_
