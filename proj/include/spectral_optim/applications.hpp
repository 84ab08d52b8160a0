// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "spectral_optim/matrix.hpp"
#include "spectral_optim/optimizer.hpp"

namespace spo {

/// Prescribed in-degree n_i for every vertex of a directed graph.
struct DegreeSpec {
  std::vector<std::size_t> degrees;
  Direction direction = Direction::Max;
};

struct GraphResult {
  NonNegativeMatrix adjacency;
  double rho = 0.0;
  OptimizationResult run;
};

/// Extremal spectral radius over 0/1 matrices whose row i has n_i ones.
/// Uses at-most degree sets for maximization and at-least sets for
/// minimization, then runs the selective greedy method.
GraphResult optimize_graph(const DegreeSpec& spec, OptimizerConfig cfg = {});

ProductFamily graph_family(const DegreeSpec& spec);

/// Rows of B(r, A) = {X >= 0 : |X - A|_inf <= r} as L1 balls around A's rows.
ProductFamily linf_ball_family(const NonNegativeMatrix& a, double r);

struct StabilizationProblem {
  NonNegativeMatrix a;
  double target = 1.0;
  double r_tol = 1e-6;
};

struct StabilizationResult {
  NonNegativeMatrix x;
  double r_star = 0.0;
  double rho_x = 0.0;
  double rho_a = 0.0;
  /// Final bracket: the target is missed at r_lo and met at r_hi.
  double r_lo = 0.0;
  double r_hi = 0.0;
  int bisection_steps = 0;
};

/// Closest matrix (in the induced infinity norm) with rho <= target, found by
/// bisection on the radius with inner spectral-radius minimization.
StabilizationResult closest_stable(const StabilizationProblem& p,
                                   OptimizerConfig cfg = {});

/// Closest matrix with rho >= target - 1e-6, mirror of closest_stable using
/// maximization over the same balls.
StabilizationResult closest_unstable(const StabilizationProblem& p,
                                     OptimizerConfig cfg = {});

}  // namespace spo
