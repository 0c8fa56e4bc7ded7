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

#include "circuitlp/oracles.hpp"

#include "circuitlp/error.hpp"
#include "circuitlp/simplex.hpp"

namespace circuitlp {

Weights inverse_weights(const Vector& x) {
  Weights w;
  w.reserve(x.size());
  for (const auto& xi : x) {
    if (sgn(xi) == 0) {
      w.push_back(ExtendedRational::infinity());
    } else {
      w.emplace_back(Rational(1 / xi));
    }
  }
  return w;
}

Weights unit_weights(std::size_t n) { return Weights(n, ExtendedRational(1)); }

Rational weighted_negative_part(const Weights& w, const Vector& z) {
  Rational total = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(z[i]) >= 0) continue;
    if (w[i].is_infinite()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative entry under an infinite weight");
    }
    total -= w[i].value() * z[i];
  }
  return total;
}

bool is_valid_dual(const Matrix& a, const Vector& c, const Weights& w,
                   const DualCertificate& d) {
  if (sgn(d.lambda) < 0) return false;
  if (d.s != c + a.transpose() * d.y) return false;
  for (std::size_t i = 0; i < d.s.size(); ++i) {
    if (sgn(d.s[i]) < 0) return false;
    if (w[i].is_finite() && d.s[i] > d.lambda * w[i].value()) return false;
  }
  return true;
}

std::optional<ElementaryVector> support_circuit_within(const Matrix& a,
                                                       const Vector& c,
                                                       const IndexSet& within,
                                                       const IndexSet& s) {
  for (Index target : s.intersect(within)) {
    auto h = circuit_through(a, within, target);
    if (!h) continue;
    Vector z = canonical_scaling(*h);
    if (sgn(dot(c, z)) > 0) z = -z;
    return ElementaryVector::from(std::move(z));
  }
  return std::nullopt;
}

std::optional<ElementaryVector> support_circuit(const Matrix& a,
                                                const Vector& c,
                                                const Vector& x,
                                                const IndexSet& s) {
  return support_circuit_within(a, c, support(x), s);
}

RatioCircuitResult ratio_circuit(const Matrix& a, const Vector& c,
                                 const Weights& w) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (c.size() != n || w.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "ratio_circuit inputs");
  }
  std::vector<Index> finite;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].is_finite()) {
      if (sgn(w[i].value()) < 0) {
        throw Error(ErrorCode::kInvalidArgument, "weights must be >= 0");
      }
      finite.push_back(i);
    }
  }
  const std::size_t f = finite.size();

  // Columns: p (n), q (f), slack sigma. Rows: A p - A q = 0; <w, q> + sigma = 1.
  Matrix lp(m + 1, n + f + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp(i, j) = a(i, j);
    for (std::size_t k = 0; k < f; ++k) lp(i, n + k) = -a(i, finite[k]);
  }
  for (std::size_t k = 0; k < f; ++k) lp(m, n + k) = w[finite[k]].value();
  lp(m, n + f) = 1;
  Vector rhs = zeros(m + 1);
  rhs[m] = 1;
  Vector cost = zeros(n + f + 1);
  for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
  for (std::size_t k = 0; k < f; ++k) cost[n + k] = -c[finite[k]];

  SimplexOutcome sol = simplex_solve(lp, rhs, cost);
  if (sol.status == LpStatus::kUnbounded) {
    throw Error(ErrorCode::kUnboundedRatioLP,
                "a kernel direction with no weighted negative part has "
                "negative cost");
  }
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kAssertionFailed, "ratio program infeasible");
  }

  RatioCircuitResult out;
  Vector y_lp(sol.y->begin(), sol.y->begin() + static_cast<std::ptrdiff_t>(m));
  out.dual.y = -y_lp;
  out.dual.s = c + a.transpose() * out.dual.y;
  out.dual.lambda = -(*sol.y)[m];

  if (sgn(sol.objective) == 0) {
    out.status = RatioStatus::kZero;
    return out;
  }

  Vector z = zeros(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = (*sol.x)[j];
  for (std::size_t k = 0; k < f; ++k) z[finite[k]] -= (*sol.x)[n + k];

  ConformalDecomposition parts = conformal_decompose(a, z);
  std::optional<Rational> best_ratio;
  std::size_t best = 0;
  for (std::size_t k = 0; k < parts.parts.size(); ++k) {
    const Vector& h = parts.parts[k].g;
    Rational den = weighted_negative_part(w, h);
    if (sgn(den) == 0) continue;
    Rational ratio = dot(c, h) / den;
    if (!best_ratio || ratio < *best_ratio) {
      best_ratio = ratio;
      best = k;
    }
  }
  if (!best_ratio) {
    throw Error(ErrorCode::kAssertionFailed,
                "no decomposition part carries weight");
  }
  const Vector& h = parts.parts[best].g;
  Vector g = (1 / weighted_negative_part(w, h)) * h;
  if (dot(c, g) != -out.dual.lambda) {
    throw Error(ErrorCode::kAssertionFailed,
                "ratio circuit violates strong duality");
  }
  out.status = RatioStatus::kCircuit;
  out.g = ElementaryVector::from(std::move(g));
  return out;
}

Augmentation augment_maximal(const Matrix& a, const Vector& x,
                             const Vector& g,
                             const std::optional<Bounds>& u) {
  if (g.size() != x.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "augmentation direction");
  }
  if (is_zero(g)) throw Error(ErrorCode::kZeroDirection, "g = 0");
  if (!is_zero(a * g)) throw Error(ErrorCode::kNotInKernel, "A g != 0");
  std::optional<Rational> alpha;
  auto consider = [&](Rational t) {
    if (!alpha || t < *alpha) alpha = std::move(t);
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sgn(g[i]) < 0) {
      consider(x[i] / -g[i]);
    } else if (sgn(g[i]) > 0 && u && (*u)[i].is_finite()) {
      consider(((*u)[i].value() - x[i]) / g[i]);
    }
  }
  if (!alpha) return {x, std::nullopt};
  return {x + *alpha * g, alpha};
}

}  // namespace circuitlp
