// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>

#include "spectral_optim/matrix.hpp"

namespace spo {

struct PowerConfig {
  /// Stop when successive normalized iterates differ by at most eps in the
  /// max norm.
  double eps = 1e-8;
  /// Iteration cap; 0 selects the dimension-dependent default 100*d + 10000.
  int max_iters = 0;
  /// Components at or below this value count as zero when extracting rho.
  double zero_tol = 1e-12;

  int resolved_max_iters(std::size_t d) const {
    return max_iters > 0 ? max_iters : static_cast<int>(100 * d + 10000);
  }
  void validate() const;
};

struct Eigenpair {
  double rho = 0.0;
  /// Selected right leading eigenvector, unit Euclidean norm.
  Vector v;
  /// Left leading eigenvector when it was requested.
  std::optional<Vector> u;
  int power_iters = 0;
};

/// Collatz-Wielandt extraction: max over components with v_i > zero_tol of
/// (Av)_i / v_i, or (v, Av) when no component qualifies. `v` must have unit
/// Euclidean norm for the fallback to be meaningful.
double max_ratio_estimate(const NonNegativeMatrix& a, std::span<const double> v,
                          double zero_tol);

/// Selected leading eigenpair via the power method on A + I started from the
/// all-ones vector. The limit is the eigenvector singled out by A + eps*E as
/// eps -> 0, so multiple leading eigenvalues never leave a choice open.
/// Throws PowerNotConverged when the iteration cap is reached.
Eigenpair selected_eigenpair(const NonNegativeMatrix& a,
                             const PowerConfig& cfg = {});

/// Same iteration from an arbitrary non-negative start vector. Used by the
/// plain greedy method, whose eigenvectors are not the selected ones.
Eigenpair eigenpair_from(const NonNegativeMatrix& a, std::span<const double> start,
                         const PowerConfig& cfg = {});

/// Selected left leading eigenvector (selected eigenvector of A^T), unit norm.
Vector left_eigenvector(const NonNegativeMatrix& a, const PowerConfig& cfg = {});

}  // namespace spo
