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

#include "circuitlp/circuits.hpp"

#include <algorithm>

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"

namespace circuitlp {

namespace {

// Fundamental circuit of column `ordered[col]` relative to the pivot columns
// to its left in the echelon form of A restricted to `ordered`.
Vector fundamental_circuit(const Echelon& e, const std::vector<Index>& ordered,
                           std::size_t col, std::size_t n) {
  Vector v = zeros(n);
  v[ordered[col]] = 1;
  for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
    if (e.pivot_columns[k] > col) break;
    const Rational& coeff = e.reduced(k, col);
    if (sgn(coeff) != 0) v[ordered[e.pivot_columns[k]]] = -coeff;
  }
  return v;
}

// Visits all k-subsets of [0, n) in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<Index> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_elementary(const Matrix& a, const Vector& g) {
  if (g.size() != a.cols() || is_zero(g)) return false;
  if (!is_zero(a * g)) return false;
  IndexSet c = support(g);
  if (rank(a, c) + 1 != c.size()) return false;
  for (Index i : c) {
    IndexSet rest = c.minus(IndexSet{i});
    if (rank(a, rest) != rest.size()) return false;
  }
  return true;
}

Vector canonical_scaling(const Vector& g) {
  Integer lcm_den = 1;
  for (const auto& x : g) {
    if (sgn(x) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                             x.get_den_mpz_t());
  }
  std::vector<Integer> ints(g.size());
  Integer gcd_num = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    ints[i] = g[i].get_num() * (lcm_den / g[i].get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (gcd_num == 0) return g;
  int sign = 1;
  for (const auto& v : ints) {
    if (sgn(v) != 0) {
      sign = sgn(v);
      break;
    }
  }
  Vector out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = Rational(ints[i] / gcd_num * sign);
  }
  return out;
}

Rational imbalance(const Vector& g) {
  Rational lo = 0, hi = 0;
  bool first = true;
  for (const auto& x : g) {
    if (sgn(x) == 0) continue;
    Rational ax = abs(x);
    if (first || ax < lo) lo = ax;
    if (first || ax > hi) hi = ax;
    first = false;
  }
  if (first) return 1;
  return hi / lo;
}

std::optional<Vector> circuit_through(const Matrix& a, const IndexSet& within,
                                      Index s) {
  if (!within.contains(s)) return std::nullopt;
  std::vector<Index> ordered;
  for (Index i : within) {
    if (i != s) ordered.push_back(i);
  }
  ordered.push_back(s);
  const std::size_t last = ordered.size() - 1;
  if (a.rows() == 0) {
    return unit_vector(a.cols(), s);
  }
  // IndexSet would sort `ordered`; s has to stay the last column.
  Matrix sub(a.rows(), ordered.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < ordered.size(); ++k) sub(i, k) = a(i, ordered[k]);
  }
  Echelon e = row_reduce(std::move(sub));
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == last) {
    return std::nullopt;
  }
  return fundamental_circuit(e, ordered, last, a.cols());
}

std::optional<Vector> find_circuit(const Matrix& a, const IndexSet& within) {
  if (within.empty()) return std::nullopt;
  std::vector<Index> ordered(within.begin(), within.end());
  if (a.rows() == 0) return unit_vector(a.cols(), ordered.front());
  Echelon e = row_reduce(a.select_columns(within));
  std::size_t k = 0;
  for (std::size_t col = 0; col < ordered.size(); ++col) {
    if (k < e.pivot_columns.size() && e.pivot_columns[k] == col) {
      ++k;
      continue;
    }
    return fundamental_circuit(e, ordered, col, a.cols());
  }
  return std::nullopt;
}

std::vector<ElementaryVector> enumerate_elementary_vectors(
    const Matrix& a, std::size_t max_columns) {
  const std::size_t n = a.cols();
  if (n > max_columns) {
    throw Error(ErrorCode::kTooLarge,
                "enumeration capped at " + std::to_string(max_columns) +
                    " columns, got " + std::to_string(n));
  }
  const std::size_t r = rank(a);
  std::vector<ElementaryVector> out;
  for (std::size_t k = 1; k <= std::min(n, r + 1); ++k) {
    for_each_subset(n, k, [&](const std::vector<Index>& subset) {
      IndexSet c(subset);
      Matrix sub = a.select_columns(c);
      if (rank(sub) + 1 != k) return;
      Matrix kern = kernel_basis(sub);
      Vector local = kern.column(0);
      for (const auto& x : local) {
        if (sgn(x) == 0) return;  // a smaller circuit sits inside
      }
      out.push_back(ElementaryVector{canonical_scaling(embed(local, c, n)), c});
    });
  }
  return out;
}

KappaEstimate kappa_exact(const Matrix& a, std::size_t max_columns) {
  Rational kappa = 1;
  for (const auto& ev : enumerate_elementary_vectors(a, max_columns)) {
    Rational k = imbalance(ev.g);
    if (k > kappa) kappa = k;
  }
  return {kappa, true};
}

KappaEstimate kappa_dual(const Matrix& a, std::size_t max_columns) {
  if (a.cols() > max_columns) {
    throw Error(ErrorCode::kTooLarge, "kappa_dual size cap");
  }
  Matrix k = kernel_basis(a);
  if (k.cols() == 0) {
    // Im(A^T) is the whole space; its elementary vectors are unit vectors.
    return {Rational(1), true};
  }
  return kappa_exact(k.transpose(), max_columns);
}

Vector sign_compatible_circuit(const Matrix& a, const Vector& r) {
  Vector cur = r;
  while (true) {
    auto found = find_circuit(a, support(cur));
    if (!found) {
      throw Error(ErrorCode::kNotInKernel,
                  "no circuit inside the support of a kernel vector");
    }
    Vector h = std::move(*found);
    IndexSet hs = support(h);
    Index i0 = hs[0];
    if (sgn(h[i0]) != sgn(cur[i0])) h = -h;
    if (sign_compatible(h, cur)) return h;
    // Move along h until some agreeing coordinate of cur hits zero; the
    // result stays sign compatible with r and has strictly smaller support.
    std::optional<Rational> theta;
    for (Index i : hs) {
      if (sgn(h[i]) * sgn(cur[i]) > 0) {
        Rational t = cur[i] / h[i];
        if (!theta || t < *theta) theta = t;
      }
    }
    cur = cur - *theta * h;
  }
}

ConformalDecomposition conformal_decompose(const Matrix& a, const Vector& x) {
  if (x.size() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "decomposition target length");
  }
  if (!is_zero(a * x)) {
    throw Error(ErrorCode::kNotInKernel, "A x != 0");
  }
  ConformalDecomposition d;
  d.target = x;
  Vector residual = x;
  while (!is_zero(residual)) {
    Vector h = sign_compatible_circuit(a, residual);
    std::optional<Rational> alpha;
    for (Index i : support(h)) {
      Rational t = residual[i] / h[i];
      if (!alpha || t < *alpha) alpha = t;
    }
    Vector part = *alpha * h;
    residual = residual - part;
    d.parts.push_back(ElementaryVector::from(std::move(part)));
  }
  return d;
}

}  // namespace circuitlp
