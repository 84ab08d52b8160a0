// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "spectral_optim/matrix.hpp"

namespace spo {

/// (normal, x) <= rhs
struct LinearConstraint {
  Vector normal;
  double rhs = 0.0;
};

/// Optimize (objective, x) subject to the constraints and lower <= x <= upper.
/// Lower bounds must be finite; upper bounds may be +infinity.
struct LinearProgram {
  Vector objective;
  std::vector<LinearConstraint> constraints;
  Vector lower;
  Vector upper;
  Direction sense = Direction::Max;
};

struct LpSolution {
  Vector x;
  double value = 0.0;
};

/// Two-phase primal simplex on the slack formulation with Bland's pivot rule.
/// Returns an optimal vertex. Throws spo::Error with ErrorCode::Infeasible or
/// ErrorCode::Unbounded.
LpSolution lp_optimize(const LinearProgram& lp);

}  // namespace spo
