// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectral_optim/optimizer.hpp"
#include "spectral_optim/random.hpp"

namespace spo {

struct BenchSpec {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> set_sizes;
  DensityInterval density{0.09, 0.15};
  FamilyKind kind = FamilyKind::Sparse;
  int trials = 10;
  std::uint64_t seed = 42;
  Direction direction = Direction::Max;
  Method method = Method::SelectiveGreedy;
  /// Worker threads; 0 reads SPECTRAL_OPTIM_THREADS, then the core count.
  unsigned threads = 0;

  void validate() const;
};

struct BenchCell {
  std::size_t d = 0;
  std::size_t n = 0;
  double mean_iters = 0.0;
  double mean_time_s = 0.0;
  int trials = 0;
  /// Trials that threw; excluded from the means.
  int failures = 0;
  /// Trials that ended in a status other than optimal.
  int non_optimal = 0;
  std::uint64_t seed = 0;
  std::string first_error;
};

/// One cell per (d, N) pair, dims-major. Trial t of every cell uses seed
/// `spec.seed ^ t`.
std::vector<BenchCell> run_benchmark(const BenchSpec& spec);

/// Columns: d, N, mean_iters, mean_time_s, trials, seed.
std::string bench_to_csv(const std::vector<BenchCell>& cells);
std::string bench_to_text(const std::vector<BenchCell>& cells, const BenchSpec& spec);

unsigned resolve_thread_count(unsigned requested);

}  // namespace spo
