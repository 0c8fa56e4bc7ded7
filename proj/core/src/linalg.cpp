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

#include "circuitlp/linalg.hpp"

#include <numeric>

#include "circuitlp/error.hpp"

namespace circuitlp {

namespace {

void scale_row(Matrix& m, std::size_t r, const Rational& s) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (sgn(m(r, j)) != 0) m(r, j) *= s;
  }
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

Rational power_of_two(long k) {
  Integer p = 1;
  p <<= static_cast<mp_bitcnt_t>(k < 0 ? -k : k);
  return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace

Echelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Index> origin(rows);
  std::iota(origin.begin(), origin.end(), Index{0});

  Echelon e;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, j)) == 0) continue;
      std::size_t bits = bit_size(m(i, j));
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    swap_rows(m, r, best);
    std::swap(origin[r], origin[best]);
    scale_row(m, r, 1 / Rational(m(r, j)));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, j)) == 0) continue;
      Rational f = m(i, j);
      for (std::size_t k = j; k < cols; ++k) {
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
      }
    }
    e.pivot_columns.push_back(j);
    e.pivot_source_rows.push_back(origin[r]);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& a, const IndexSet& cols) {
  if (cols.empty() || a.rows() == 0) return 0;
  return row_reduce(a.select_columns(cols)).rank();
}

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return row_reduce(a).rank();
}

IndexSet closure(const Matrix& a, const IndexSet& cols) {
  const std::size_t base = rank(a, cols);
  IndexSet out;
  for (Index i = 0; i < a.cols(); ++i) {
    if (cols.contains(i)) {
      out.insert(i);
      continue;
    }
    IndexSet grown = cols;
    grown.insert(i);
    if (rank(a, grown) == base) out.insert(i);
  }
  return out;
}

Matrix kernel_basis(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(n);
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(n, false);
  for (Index j : e.pivot_columns) is_pivot[j] = true;

  std::vector<Vector> basis;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zeros(n);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
      v[e.pivot_columns[k]] = -e.reduced(k, f);
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, n);
}

std::optional<Vector> solve_square(const Matrix& m, const Vector& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) return std::nullopt;
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivot_columns.back() != n - 1)) {
    return std::nullopt;
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
  return x;
}

std::optional<Vector> solve_any(const Matrix& a, const Vector& b) {
  const std::size_t n = a.cols();
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "solve_any rhs");
  }
  if (a.rows() == 0) return zeros(n);
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == n) {
    return std::nullopt;
  }
  Vector x = zeros(n);
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
    x[e.pivot_columns[k]] = e.reduced(k, n);
  }
  return x;
}

Vector basic_solution(const Matrix& a, const Vector& b, const IndexSet& basis) {
  if (basis.size() != a.rows()) {
    throw Error(ErrorCode::kSingularBasis,
                "basis size " + std::to_string(basis.size()) +
                    " differs from row count " + std::to_string(a.rows()));
  }
  for (Index i : basis) {
    if (i >= a.cols()) {
      throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    }
  }
  auto xb = solve_square(a.select_columns(basis), b);
  if (!xb) {
    throw Error(ErrorCode::kSingularBasis,
                "A_B is singular for B = " + basis.to_string());
  }
  return embed(*xb, basis, a.cols());
}

IndexSet independent_rows(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  Echelon e = row_reduce(a.transpose());
  return IndexSet(e.pivot_columns);
}

Vector project_to_kernel(const Matrix& a, const Vector& c) {
  IndexSet rows = independent_rows(a);
  if (rows.empty()) return c;
  Matrix ar = a.select_rows(rows);
  Matrix gram = ar * ar.transpose();
  auto y = solve_square(gram, ar * c);
  if (!y) {
    throw Error(ErrorCode::kAssertionFailed, "Gram matrix is singular");
  }
  return c - ar.transpose() * *y;
}

bool in_row_space(const Matrix& a, const Vector& v) {
  return is_zero(project_to_kernel(a, v));
}

std::pair<Vector, Rational> scale_to_unit_band(const Vector& c) {
  Rational s = norm2_squared(c);
  if (sgn(s) == 0) throw Error(ErrorCode::kZeroVector, "cannot scale zero vector");
  // log2(s) is within one of (bits(num) - bits(den)); start there and walk.
  long e = static_cast<long>(mpz_sizeinbase(s.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(s.get_den_mpz_t(), 2));
  long k = -(e / 2);
  auto scaled_norm = [&](long kk) -> Rational { return s * power_of_two(2 * kk); };
  while (scaled_norm(k) < 1) ++k;
  while (scaled_norm(k) >= 4) --k;
  Rational factor = power_of_two(k);
  return {factor * c, factor};
}

}  // namespace circuitlp
