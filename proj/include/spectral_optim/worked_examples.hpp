// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spectral_optim/optimizer.hpp"

namespace spo {

/// Three-row finite family whose maximal spectral radius is 12, reached at
/// rows (12,0,0), (1,1,1), (1,1,3).
ProductFamily cycling_example_family();

/// Start matrix [[1,1,1],[1,1,1],[1,1,3]] for the cycling demonstration.
NonNegativeMatrix cycling_example_start();

/// Eigenvector selector that returns a non-selected leading eigenvector on
/// the two matrices with a multiple leading eigenvalue:
///   [[0,5,10],[0,10,0],[0,0,10]]  -> (2,2,1)
///   [[0,10,5],[0,10,0],[0,0,10]]  -> (2,1,2)
/// Every other matrix gets its selected eigenpair.
testing::EigenSelector adversarial_selector(PowerConfig power = {});

struct CyclingDemo {
  /// Greedy run from the demo start matrix driven by adversarial_selector.
  OptimizationResult adversarial;
  /// Selective greedy run with default start.
  OptimizationResult selective;
};

CyclingDemo run_cycling_demo(const OptimizerConfig& base = {});

}  // namespace spo
