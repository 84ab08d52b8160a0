// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "spectral_optim/matrix.hpp"
#include "spectral_optim/perron.hpp"
#include "spectral_optim/row_set.hpp"

namespace spo {

enum class Method { SimplexSmallestIndex, SimplexPivot, Greedy, SelectiveGreedy };

enum class Status { Optimal, BoundCertified, MaxIters, ReducibleDetected, CycleDetected };

std::string_view to_string(Method m);
std::string_view to_string(Status s);
/// Accepts the CLI spellings: selective-greedy, greedy, simplex,
/// simplex-smallest-index, simplex-pivot.
Method parse_method(std::string_view text);

struct OptimizerConfig {
  Direction direction = Direction::Max;
  Method method = Method::SelectiveGreedy;
  PowerConfig power;
  /// A row is replaced only if its scalar product with v moves by >= delta in
  /// the optimizing direction.
  double delta = 1e-10;
  double zero_tol = 1e-12;
  int max_outer_iters = 1000;
  double reducibility_alpha = 1e-8;

  void validate() const;
};

struct IterationRecord {
  int iter = 0;
  double rho = 0.0;
  double s_bound = 0.0;
  double t_bound = 0.0;
  std::vector<std::size_t> rows_changed;
  double time_s = 0.0;
  /// True for iterates of the reducibility retry, whose bounds refer to the
  /// perturbed family.
  bool perturbed = false;
  /// 1 - max_j u_{k+1,j} v_{k,j} / (u_{k+1}, v_k); filled when requested.
  std::optional<double> contraction;
};

using IterationTrace = std::vector<IterationRecord>;

struct OptimizationResult {
  NonNegativeMatrix matrix;
  double rho = 0.0;
  Direction direction = Direction::Max;
  double t_bound = 0.0;
  double s_bound = 0.0;
  /// Eigenvector of `matrix` used for the bounds.
  Vector eigenvector;
  IterationTrace trace;
  Status status = Status::MaxIters;
  int iterations = 0;
  /// Set when status == ReducibleDetected: rho at the first fixed point and
  /// rho reached on the alpha-perturbed family.
  std::optional<double> unperturbed_rho;
  std::optional<double> perturbed_rho;
};

struct RunOptions {
  /// Starting matrix; every row must belong to its set. Defaults to the rows
  /// optimal against the all-ones vector.
  std::optional<NonNegativeMatrix> start;
  /// Fill IterationRecord::contraction (costs one left-eigenvector solve per
  /// iteration).
  bool record_contraction = false;
  /// Called once per outer iteration with the iterate and its eigenpair.
  std::function<void(int iter, const NonNegativeMatrix&, const Eigenpair&)> on_iterate;
};

struct GreedyStep {
  NonNegativeMatrix matrix;
  std::vector<std::size_t> changed;
};

/// Replaces every row whose best alternative improves (a_i, v) by at least
/// delta in the given direction.
GreedyStep greedy_step(const NonNegativeMatrix& a, std::span<const double> v,
                       const ProductFamily& family, Direction dir, double delta);

/// Dispatches on cfg.method.
OptimizationResult optimize(const ProductFamily& family, const OptimizerConfig& cfg,
                            const RunOptions& opts = {});

/// Greedy with selected eigenvectors; cfg.method is ignored.
OptimizationResult selective_greedy(const ProductFamily& family,
                                    const OptimizerConfig& cfg,
                                    const RunOptions& opts = {});

/// One-row-per-iteration method. Uses the pivot rule when cfg.method is
/// SimplexPivot and the smallest-index rule otherwise.
OptimizationResult spectral_simplex(const ProductFamily& family,
                                    const OptimizerConfig& cfg,
                                    const RunOptions& opts = {});

/// Content hash of a matrix with entries quantized at 1e-12.
std::uint64_t matrix_signature(const NonNegativeMatrix& a);

/// True iff the last signature repeats an earlier one with no improvement of
/// more than delta in between.
bool detect_cycle(std::span<const std::uint64_t> signatures,
                  std::span<const double> rhos, Direction dir, double delta);

class CycleDetector {
 public:
  CycleDetector(Direction dir, double delta) : dir_(dir), delta_(delta) {}

  /// Records the iterate and reports whether it closes a cycle.
  bool observe(std::uint64_t signature, double rho);

 private:
  Direction dir_;
  double delta_;
  std::vector<std::uint64_t> sigs_;
  std::vector<double> rhos_;
};

/// Replaces each F_i by {(1 - alpha) a + alpha e_{(i+1) mod d}}, so every
/// matrix of the result dominates alpha times a cyclic permutation and is
/// irreducible. alpha == 0 returns the family unchanged.
ProductFamily perturb_family(const ProductFamily& family, double alpha);

/// Runs the optimizer on perturb_family(family, cfg.reducibility_alpha) and
/// merges it with `first`, the run that stopped on a non-positive eigenvector.
OptimizationResult detect_and_remedy_reducibility(const ProductFamily& family,
                                                  const OptimizerConfig& cfg,
                                                  OptimizationResult first);

struct BruteForceResult {
  NonNegativeMatrix matrix;
  double rho = 0.0;
  std::vector<std::size_t> row_indices;
};

/// Exhaustive search over an all-finite family with at most `limit` members.
BruteForceResult brute_force_optimum(const ProductFamily& family, Direction dir,
                                     std::size_t limit = 1'000'000);

/// q = 1 - m^2 / (m^2 + (d-1) M^2) over a strictly positive finite family.
double linear_rate_bound(const ProductFamily& family);

double contraction_factor(std::span<const double> u_next, std::span<const double> v_k);

namespace testing {

/// Replacement for the selected-eigenvector computation. Receives the
/// current matrix and the previous eigenpair (null on the first iteration).
using EigenSelector =
    std::function<Eigenpair(const NonNegativeMatrix&, const Eigenpair* previous)>;

/// Greedy or simplex run with eigenvectors supplied by `selector`. Exists to
/// reproduce cycling caused by unlucky eigenvector choices.
OptimizationResult optimize_with_selector(const ProductFamily& family,
                                          const OptimizerConfig& cfg,
                                          const RunOptions& opts,
                                          const EigenSelector& selector);

}  // namespace testing

}  // namespace spo
