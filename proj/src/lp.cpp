// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "spectral_optim/error.hpp"

namespace spo {
namespace {

constexpr double kPivotTol = 1e-12;
constexpr double kFeasTol = 1e-9;

// Dense tableau for: maximize c^T z, T z = rhs, z >= 0.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const {
    return t_[i * (cols_ + 1) + j];
  }
  double& rhs(std::size_t i) { return at(i, cols_); }
  double rhs(std::size_t i) const { return at(i, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    at(r, c) = 1.0;
    basis_[r] = c;
  }

  // Bland's rule: lowest-index improving column enters, ties in the ratio
  // test go to the lowest-index basic variable. `allowed` masks columns that
  // may enter. Returns false when the problem is unbounded.
  bool maximize(const Vector& cost, const std::vector<bool>& allowed) {
    const std::size_t max_pivots = 50 * (rows_ + cols_) + 1000;
    for (std::size_t it = 0; it < max_pivots; ++it) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
        if (!allowed[j]) continue;
        double reduced = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) reduced -= cost[basis_[i]] * at(i, j);
        if (reduced > kPivotTol) enter = j;
      }
      if (enter == cols_) return true;

      std::size_t leave = rows_;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double a = at(i, enter);
        if (a <= kPivotTol) continue;
        const double ratio = rhs(i) / a;
        if (leave == rows_ || ratio < best_ratio - kPivotTol ||
            (ratio <= best_ratio + kPivotTol && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
    throw Error(ErrorCode::Internal, "simplex pivot limit exceeded");
  }

  double objective(const Vector& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) v += cost[basis_[i]] * rhs(i);
    return v;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "LP has no variables");
  if (lp.lower.size() != n || lp.upper.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "LP bound vectors have wrong length");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(lp.objective[j]) || !std::isfinite(lp.lower[j]) ||
        std::isnan(lp.upper[j]) || lp.lower[j] > lp.upper[j]) {
      throw Error(ErrorCode::InvalidArgument, "LP bounds or objective malformed");
    }
  }
  for (const auto& c : lp.constraints) {
    if (c.normal.size() != n || !std::isfinite(c.rhs)) {
      throw Error(ErrorCode::InvalidArgument, "LP constraint malformed");
    }
    for (double a : c.normal) {
      if (!std::isfinite(a)) {
        throw Error(ErrorCode::InvalidArgument, "LP constraint malformed");
      }
    }
  }
}

}  // namespace

LpSolution lp_optimize(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.objective.size();

  // Shift to y = x - lower >= 0 and collect every row as (a, y) <= b.
  std::vector<Vector> rows;
  Vector b;
  for (const auto& c : lp.constraints) {
    rows.push_back(c.normal);
    b.push_back(c.rhs - dot(c.normal, lp.lower));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isinf(lp.upper[j])) continue;
    Vector e(n, 0.0);
    e[j] = 1.0;
    rows.push_back(std::move(e));
    b.push_back(lp.upper[j] - lp.lower[j]);
  }
  const std::size_t m = rows.size();

  std::size_t n_art = 0;
  for (double bi : b) n_art += bi < 0.0 ? 1 : 0;

  // Columns: [structural n | slack m | artificial n_art].
  const std::size_t cols = n + m + n_art;
  Tableau tab(m, cols);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = sign * rows[i][j];
    tab.at(i, n + i) = sign;
    tab.rhs(i) = sign * b[i];
    if (sign < 0.0) {
      tab.at(i, next_art) = 1.0;
      tab.basis()[i] = next_art++;
    } else {
      tab.basis()[i] = n + i;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (n_art > 0) {
    Vector phase1(cols, 0.0);
    for (std::size_t j = n + m; j < cols; ++j) phase1[j] = -1.0;
    if (!tab.maximize(phase1, allowed)) {
      throw Error(ErrorCode::Internal, "phase-one LP reported unbounded");
    }
    if (tab.objective(phase1) < -kFeasTol) {
      throw Error(ErrorCode::Infeasible, "LP infeasible");
    }
    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and keep their artificial at zero.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] < n + m) continue;
      for (std::size_t j = 0; j < n + m; ++j) {
        if (std::abs(tab.at(i, j)) > 1e-9) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = n + m; j < cols; ++j) allowed[j] = false;
  }

  Vector cost(cols, 0.0);
  const double sense = lp.sense == Direction::Max ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n; ++j) cost[j] = sense * lp.objective[j];
  if (!tab.maximize(cost, allowed)) {
    throw Error(ErrorCode::Unbounded, "LP unbounded");
  }

  LpSolution sol;
  sol.x = lp.lower;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = tab.basis()[i];
    if (j < n) sol.x[j] += tab.rhs(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = std::clamp(sol.x[j], lp.lower[j], lp.upper[j]);
  }
  sol.value = dot(lp.objective, sol.x);
  return sol;
}

}  // namespace spo
