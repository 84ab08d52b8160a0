// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "spectral_optim/row_set.hpp"

namespace spo {

/// xoshiro256** (Blackman & Vigna) seeded through splitmix64. Chosen over the
/// standard library engines plus distributions because both the bit stream
/// and the mapping to doubles are pinned here, so generated families are
/// identical on every platform and in other language ports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform on (0, 1]: ((x >> 11) + 1) * 2^-53.
  double uniform_open_closed();
  /// Uniform on [0, 1): (x >> 11) * 2^-53.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n);

 private:
  std::array<std::uint64_t, 4> s_;
};

enum class FamilyKind { Positive, Sparse, Polyhedral };

struct DensityInterval {
  double lo = 0.09;
  double hi = 0.15;
};

/// Finite family with N rows per set. Sparse: each set draws gamma_i uniform
/// on the density interval, each entry is non-zero with probability gamma_i,
/// and an all-zero row gets its first entry set. Positive: every entry
/// non-zero. Non-zero magnitudes are uniform on (0, 1].
ProductFamily generate_random_family(std::size_t d, std::size_t n,
                                     DensityInterval density, std::uint64_t seed,
                                     FamilyKind kind);

/// Polyhedral family: each set is {x in [0,1]^d : (x, b_j) <= 1, j < N} with
/// normals uniform on (0, 1]^d scaled to unit Euclidean norm.
ProductFamily generate_polyhedral_family(std::size_t d, std::size_t n,
                                         std::uint64_t seed);

/// Axis-aligned ellipsoids with centers in [1, 2], axes in [0.5, 1.5] and
/// radius 0.4, so every admissible row is strictly positive.
ProductFamily generate_ellipsoid_family(std::size_t d, std::uint64_t seed);

}  // namespace spo
