// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace spo {

using Vector = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Direction { Max, Min };

std::string_view to_string(Direction dir);
Direction parse_direction(std::string_view text);

/// True when `candidate` beats `incumbent` in the given direction.
inline bool improves(Direction dir, double candidate, double incumbent) {
  return dir == Direction::Max ? candidate > incumbent : candidate < incumbent;
}

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> x);
double norm_inf(std::span<const double> x);

/// Dense square matrix with non-negative entries, stored row-major.
class NonNegativeMatrix {
 public:
  NonNegativeMatrix() = default;

  /// Zero matrix of dimension d (d >= 1).
  explicit NonNegativeMatrix(std::size_t d);

  /// Validating constructor; throws spo::Error on a negative or non-finite
  /// entry, or when entries.size() != d*d.
  NonNegativeMatrix(std::size_t d, std::vector<double> entries);

  static NonNegativeMatrix identity(std::size_t d);
  static NonNegativeMatrix from_rows(const std::vector<Vector>& rows);

  std::size_t dim() const noexcept { return d_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * d_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * d_, d_};
  }

  /// Replaces row i; throws on length mismatch or negative entries.
  void set_row(std::size_t i, std::span<const double> values);

  std::span<const double> data() const noexcept { return data_; }

  /// y = A x
  Vector multiply(std::span<const double> x) const;
  /// y = A^T x
  Vector multiply_transposed(std::span<const double> x) const;

  NonNegativeMatrix transposed() const;

  /// Adds c to every diagonal entry (c >= 0).
  NonNegativeMatrix shifted(double c) const;

  /// Max absolute row sum.
  double norm_inf() const;

  /// Max absolute row sum of (*this - other).
  double distance_inf(const NonNegativeMatrix& other) const;

  bool operator==(const NonNegativeMatrix& other) const = default;

 private:
  std::size_t d_ = 0;
  std::vector<double> data_;
};

}  // namespace spo
