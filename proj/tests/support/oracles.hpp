// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations shared by the test suites. None of these
// call into the library's numerical code.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "spectral_optim/lp.hpp"
#include "spectral_optim/matrix.hpp"
#include "spectral_optim/row_set.hpp"

namespace spo::oracle {

inline Eigen::MatrixXd to_eigen(const NonNegativeMatrix& a) {
  const auto d = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = a(i, j);
  }
  return m;
}

/// Largest eigenvalue modulus from a dense general eigensolver.
inline double spectral_radius(const NonNegativeMatrix& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), false);
  double r = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    r = std::max(r, std::abs(es.eigenvalues()(k)));
  }
  return r;
}

/// Spectral radius as the largest radius over the diagonal blocks of the
/// support graph's strongly connected classes (found by a Floyd-Warshall
/// reachability closure). Each block's Perron root is simple, so the dense
/// solver stays accurate where the whole matrix has Jordan blocks at rho.
inline double spectral_radius_by_classes(const NonNegativeMatrix& a) {
  const std::size_t d = a.dim();
  std::vector<std::vector<bool>> reach(d, std::vector<bool>(d, false));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) reach[i][j] = i == j || a(i, j) > 0.0;
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < d; ++j) reach[i][j] = reach[i][j] || reach[k][j];
    }
  }
  std::vector<bool> done(d, false);
  double r = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    if (done[i]) continue;
    std::vector<Eigen::Index> cls;
    for (std::size_t j = 0; j < d; ++j) {
      if (reach[i][j] && reach[j][i]) {
        cls.push_back(static_cast<Eigen::Index>(j));
        done[j] = true;
      }
    }
    const auto n = static_cast<Eigen::Index>(cls.size());
    Eigen::MatrixXd block(n, n);
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        block(p, q) = a(static_cast<std::size_t>(cls[p]), static_cast<std::size_t>(cls[q]));
      }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(block, false);
    for (Eigen::Index k = 0; k < n; ++k) r = std::max(r, std::abs(es.eigenvalues()(k)));
  }
  return r;
}

/// Power iteration on a + eps*E (all-ones E) from e, run far past
/// convergence, shifted by I like the library iteration.
inline Vector perturbed_leading_vector(const NonNegativeMatrix& a, double eps,
                                       int iters = 200000) {
  Eigen::MatrixXd m = to_eigen(a).array() + eps;
  m += Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::VectorXd x = Eigen::VectorXd::Ones(m.rows()).normalized();
  for (int k = 0; k < iters; ++k) {
    Eigen::VectorXd y = (m * x).normalized();
    const double diff = (y - x).cwiseAbs().maxCoeff();
    x = y;
    if (diff < 1e-15) break;
  }
  return Vector(x.data(), x.data() + x.size());
}

/// Leading eigenvector of A + eps E from a dense eigensolver, sign-fixed
/// and unit-l2. Usable where the power iteration would be too slow.
inline Vector dense_perturbed_vector(const NonNegativeMatrix& a, double eps) {
  const Eigen::MatrixXd m = to_eigen(a).array() + eps;
  const Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()(k).real() > es.eigenvalues()(best).real()) best = k;
  }
  Eigen::VectorXd v = es.eigenvectors().col(best).real();
  if (v.sum() < 0.0) v = -v;
  v.normalize();
  return Vector(v.data(), v.data() + v.size());
}

struct LpOracleResult {
  Vector x;
  double value;
};

/// Exhaustive vertex enumeration: every choice of d linearly independent
/// active constraints (rows, lower and finite upper bounds) is solved, the
/// feasible intersection points are kept and the best objective wins.
inline std::optional<LpOracleResult> lp_by_vertices(const LinearProgram& lp,
                                                    double feas_tol = 1e-9) {
  const std::size_t d = lp.objective.size();
  std::vector<Vector> normals;
  std::vector<double> rhs;
  for (const auto& c : lp.constraints) {
    normals.push_back(c.normal);
    rhs.push_back(c.rhs);
  }
  for (std::size_t j = 0; j < d; ++j) {
    Vector e(d, 0.0);
    e[j] = -1.0;
    normals.push_back(e);
    rhs.push_back(-lp.lower[j]);
    if (std::isfinite(lp.upper[j])) {
      e[j] = 1.0;
      normals.push_back(e);
      rhs.push_back(lp.upper[j]);
    }
  }
  const std::size_t m = normals.size();
  std::optional<LpOracleResult> best;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d), true);
  do {
    Eigen::MatrixXd mat(d, d);
    Eigen::VectorXd b(d);
    std::size_t r = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (!pick[k]) continue;
      for (std::size_t j = 0; j < d; ++j) mat(r, j) = normals[k][j];
      b(r) = rhs[k];
      ++r;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(mat);
    if (lu.rank() < static_cast<Eigen::Index>(d)) continue;
    const Eigen::VectorXd x = lu.solve(b);
    bool feasible = true;
    for (std::size_t k = 0; k < m && feasible; ++k) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < d; ++j) lhs += normals[k][j] * x(j);
      feasible = lhs <= rhs[k] + feas_tol;
    }
    if (!feasible) continue;
    double val = 0.0;
    for (std::size_t j = 0; j < d; ++j) val += lp.objective[j] * x(j);
    const bool better = !best || (lp.sense == Direction::Max ? val > best->value + 1e-12
                                                             : val < best->value - 1e-12);
    if (better) best = LpOracleResult{Vector(x.data(), x.data() + d), val};
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

/// Random finite family drawn with std::mt19937_64, independent of the
/// library generator. Sparse rows keep each entry with probability `density`
/// and are never all-zero.
inline ProductFamily random_finite_family(std::mt19937_64& rng, std::size_t d,
                                          std::size_t n, double density) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProductFamily f;
  f.d = d;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Vector> rows(n, Vector(d, 0.0));
    for (auto& r : rows) {
      bool any = false;
      for (double& x : r) {
        if (unit(rng) < density) {
          x = 1.0 - unit(rng);
          any = true;
        }
      }
      if (!any) r[std::uniform_int_distribution<std::size_t>(0, d - 1)(rng)] = 1.0 - unit(rng);
    }
    f.sets.push_back(RowSet::finite(std::move(rows)));
  }
  return f;
}

/// Best spectral radius over a finite family by enumerating every matrix and
/// evaluating it class by class with the dense eigensolver.
inline double brute_force_rho(const ProductFamily& f, Direction dir) {
  const std::size_t d = f.d;
  std::vector<std::size_t> idx(d, 0);
  double best = dir == Direction::Max ? -1.0 : kInfinity;
  while (true) {
    NonNegativeMatrix a(d);
    for (std::size_t i = 0; i < d; ++i) {
      a.set_row(i, f.sets[i].as<FiniteSet>()->rows[idx[i]]);
    }
    const double r = spectral_radius_by_classes(a);
    best = dir == Direction::Max ? std::max(best, r) : std::min(best, r);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (++idx[k] < f.sets[k].as<FiniteSet>()->rows.size()) break;
      idx[k] = 0;
      if (k == 0) return best;
    }
    if (d == 0) return best;
  }
}

}  // namespace spo::oracle
