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

#include "circuitlp/simplex.hpp"

#include "circuitlp/error.hpp"
#include "circuitlp/linalg.hpp"

namespace circuitlp {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kInfeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

// Dense tableau: rows carry B^{-1}[A | b]; `cost` carries reduced costs with
// the negated objective value in the last slot.
struct Tableau {
  Matrix t;
  std::vector<Index> basis;
  Vector cost;

  std::size_t width() const { return t.cols() - 1; }
  const Rational& rhs(std::size_t i) const { return t(i, width()); }

  void pivot(std::size_t r, std::size_t col) {
    const std::size_t w = t.cols();
    Rational inv = 1 / Rational(t(r, col));
    for (std::size_t j = 0; j < w; ++j) {
      if (sgn(t(r, j)) != 0) t(r, j) *= inv;
    }
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (i == r || sgn(t(i, col)) == 0) continue;
      Rational f = t(i, col);
      for (std::size_t j = 0; j < w; ++j) {
        if (sgn(t(r, j)) != 0) t(i, j) -= f * t(r, j);
      }
    }
    if (sgn(cost[col]) != 0) {
      Rational f = cost[col];
      for (std::size_t j = 0; j < w; ++j) {
        if (sgn(t(r, j)) != 0) cost[j] -= f * t(r, j);
      }
    }
    basis[r] = col;
  }

  void price(const Vector& c) {
    cost = zeros(t.cols());
    for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const Rational& cb = basis[i] < c.size() ? c[basis[i]] : Rational(0);
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < t.cols(); ++j) {
        if (sgn(t(i, j)) != 0) cost[j] -= cb * t(i, j);
      }
    }
  }

  // Bland's rule over columns [0, allowed). Returns false when unbounded.
  bool run(std::size_t allowed) {
    while (true) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(cost[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return true;
      std::size_t leave = t.rows();
      Rational best;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (sgn(t(i, entering)) <= 0) continue;
        Rational ratio = rhs(i) / t(i, entering);
        if (leave == t.rows() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.rows()) return false;
      pivot(leave, entering);
    }
  }
};

}  // namespace

SimplexOutcome simplex_solve(const Matrix& a, const Vector& b, const Vector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "simplex dimensions");
  }

  Tableau tab;
  tab.t = Matrix(m, n + m + 1);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    tab.t(i, n + i) = 1;
    tab.t(i, n + m) = flip ? Rational(-b[i]) : b[i];
    tab.basis[i] = n + i;
  }
  Vector phase_one = zeros(n + m);
  for (std::size_t i = 0; i < m; ++i) phase_one[n + i] = 1;
  tab.price(phase_one);
  tab.run(n + m);

  SimplexOutcome out;
  if (sgn(tab.cost[n + m]) != 0) {
    out.status = LpStatus::kInfeasible;
    return out;
  }

  // Drive artificials out of the basis; rows where that is impossible are
  // linear combinations of the others.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(tab.t(i, j)) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) live.push_back(i);
  }
  if (live.size() != m) {
    Tableau reduced;
    reduced.t = Matrix(live.size(), n + m + 1);
    for (std::size_t k = 0; k < live.size(); ++k) {
      for (std::size_t j = 0; j < n + m + 1; ++j) reduced.t(k, j) = tab.t(live[k], j);
      reduced.basis.push_back(tab.basis[live[k]]);
    }
    tab = std::move(reduced);
  }

  tab.price(c);
  if (!tab.run(n)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }

  Vector x = zeros(n);
  for (std::size_t i = 0; i < tab.t.rows(); ++i) x[tab.basis[i]] = tab.rhs(i);

  // Tableau rows keep the order of the original rows, so `live` names the
  // rows that survived; duals come from A_{R,B}^T y_R = c_B over those rows.
  IndexSet basis_cols(std::vector<Index>(tab.basis.begin(), tab.basis.end()));
  IndexSet row_set(std::vector<Index>(live.begin(), live.end()));
  Matrix ab = a.select_rows(row_set).select_columns(basis_cols);
  Vector cb = restrict(c, basis_cols);
  auto yr = solve_square(ab.transpose(), cb);
  if (!yr) {
    throw Error(ErrorCode::kAssertionFailed, "final basis is singular");
  }
  Vector y = embed(*yr, row_set, m);
  Vector s = c - a.transpose() * y;

  out.status = LpStatus::kOptimal;
  out.objective = dot(c, x);
  out.x = std::move(x);
  out.y = std::move(y);
  out.s = std::move(s);
  out.basis = std::move(basis_cols);
  return out;
}

SimplexOutcome simplex_solve(const LpInstance& inst) {
  if (!inst.u) return simplex_solve(inst.a, inst.b, inst.c);
  const std::size_t m = inst.m();
  const std::size_t n = inst.n();
  std::vector<Index> finite;
  for (std::size_t i = 0; i < n; ++i) {
    if ((*inst.u)[i].is_finite()) finite.push_back(i);
  }
  const std::size_t f = finite.size();
  Matrix big(m + f, n + f);
  Vector rhs = zeros(m + f);
  Vector cost = zeros(n + f);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) big(i, j) = inst.a(i, j);
    rhs[i] = inst.b[i];
  }
  for (std::size_t k = 0; k < f; ++k) {
    big(m + k, finite[k]) = 1;
    big(m + k, n + k) = 1;
    rhs[m + k] = (*inst.u)[finite[k]].value();
  }
  for (std::size_t j = 0; j < n; ++j) cost[j] = inst.c[j];
  SimplexOutcome full = simplex_solve(big, rhs, cost);
  SimplexOutcome out;
  out.status = full.status;
  if (full.status == LpStatus::kOptimal) {
    out.x = Vector(full.x->begin(), full.x->begin() + static_cast<std::ptrdiff_t>(n));
    out.objective = full.objective;
  }
  return out;
}

}  // namespace circuitlp
