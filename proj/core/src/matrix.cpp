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

#include "circuitlp/matrix.hpp"

#include <sstream>

#include "circuitlp/error.hpp"

namespace circuitlp {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "row length mismatch");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols,
                            std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) {
      throw Error(ErrorCode::kDimensionMismatch, "column length mismatch");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::select_columns(const IndexSet& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) m(i, k) = (*this)(i, cols[k]);
  }
  return m;
}

Matrix Matrix::select_rows(const IndexSet& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(rows[k], j);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::operator*(const Vector& x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product");
  }
  Vector y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  }
  Matrix p(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
    }
  }
  return p;
}

Matrix Matrix::hcat(const Matrix& other) const {
  if (rows_ != other.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "hcat row mismatch");
  }
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& other) const {
  if (cols_ != other.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "vcat column mismatch");
  }
  Matrix m(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  }
  for (std::size_t i = 0; i < other.rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = other(i, j);
  }
  return m;
}

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }
Vector ones(std::size_t n) { return Vector(n, Rational(1)); }
Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v[i] = 1;
  return v;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot product");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "add");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "sub");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vector operator-(const Vector& a) {
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
  return c;
}

Rational norm1(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

Rational norm1(const Vector& v, const IndexSet& on) {
  Rational s = 0;
  for (Index i : on) s += abs(v[i]);
  return s;
}

Rational norm_inf(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) {
    if (abs(x) > s) s = abs(x);
  }
  return s;
}

Rational norm2_squared(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool is_nonnegative(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) < 0) return false;
  }
  return true;
}

IndexSet support(const Vector& v) {
  std::vector<Index> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.push_back(i);
  }
  return IndexSet(std::move(s));
}

Vector positive_part(const Vector& v) {
  Vector p(v.size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) > 0) p[i] = v[i];
  }
  return p;
}

Vector negative_part(const Vector& v) {
  Vector p(v.size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) < 0) p[i] = -v[i];
  }
  return p;
}

Vector restrict(const Vector& v, const IndexSet& on) {
  Vector r;
  r.reserve(on.size());
  for (Index i : on) r.push_back(v[i]);
  return r;
}

Vector embed(const Vector& v, const IndexSet& on, std::size_t n) {
  Vector r = zeros(n);
  for (std::size_t k = 0; k < on.size(); ++k) r[on[k]] = v[k];
  return r;
}

bool sign_compatible(const Vector& x, const Vector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) * sgn(y[i]) < 0) return false;
  }
  return true;
}

bool is_conformal(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    if (sgn(x[i]) != sgn(y[i])) return false;
    if (abs(x[i]) > abs(y[i])) return false;
  }
  return true;
}

std::string to_string(const Vector& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i].get_str();
  }
  return os.str();
}

}  // namespace circuitlp
