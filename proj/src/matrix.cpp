// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectral_optim/error.hpp"

namespace spo {

std::string_view to_string(Direction dir) {
  return dir == Direction::Max ? "max" : "min";
}

Direction parse_direction(std::string_view text) {
  if (text == "max") return Direction::Max;
  if (text == "min") return Direction::Min;
  throw Error(ErrorCode::Parse,
              "unknown direction '" + std::string(text) + "' (max|min)");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double norm_inf(std::span<const double> x) {
  double m = 0.0;
  for (double xi : x) m = std::max(m, std::abs(xi));
  return m;
}

namespace {

void check_entries(std::span<const double> values) {
  for (double x : values) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::InvalidArgument,
                  "matrix entries must be finite and non-negative");
    }
  }
}

}  // namespace

NonNegativeMatrix::NonNegativeMatrix(std::size_t d) : d_(d), data_(d * d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
}

NonNegativeMatrix::NonNegativeMatrix(std::size_t d, std::vector<double> entries)
    : d_(d), data_(std::move(entries)) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (data_.size() != d * d) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(d * d) + " entries, got " +
                    std::to_string(data_.size()));
  }
  check_entries(data_);
}

NonNegativeMatrix NonNegativeMatrix::identity(std::size_t d) {
  NonNegativeMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m.data_[i * d + i] = 1.0;
  return m;
}

NonNegativeMatrix NonNegativeMatrix::from_rows(const std::vector<Vector>& rows) {
  NonNegativeMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

void NonNegativeMatrix::set_row(std::size_t i, std::span<const double> values) {
  if (values.size() != d_) {
    throw Error(ErrorCode::InvalidArgument, "row length does not match dimension");
  }
  check_entries(values);
  std::copy(values.begin(), values.end(), data_.begin() + i * d_);
}

Vector NonNegativeMatrix::multiply(std::span<const double> x) const {
  Vector y(d_);
  for (std::size_t i = 0; i < d_; ++i) y[i] = dot(row(i), x);
  return y;
}

Vector NonNegativeMatrix::multiply_transposed(std::span<const double> x) const {
  Vector y(d_, 0.0);
  for (std::size_t i = 0; i < d_; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const double* r = data_.data() + i * d_;
    for (std::size_t j = 0; j < d_; ++j) y[j] += r[j] * xi;
  }
  return y;
}

NonNegativeMatrix NonNegativeMatrix::transposed() const {
  NonNegativeMatrix t(d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) t.data_[j * d_ + i] = data_[i * d_ + j];
  return t;
}

NonNegativeMatrix NonNegativeMatrix::shifted(double c) const {
  NonNegativeMatrix s = *this;
  for (std::size_t i = 0; i < d_; ++i) s.data_[i * d_ + i] += c;
  return s;
}

double NonNegativeMatrix::norm_inf() const {
  double m = 0.0;
  for (std::size_t i = 0; i < d_; ++i) {
    double s = 0.0;
    for (double x : row(i)) s += x;
    m = std::max(m, s);
  }
  return m;
}

double NonNegativeMatrix::distance_inf(const NonNegativeMatrix& other) const {
  if (other.d_ != d_) {
    throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < d_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < d_; ++j)
      s += std::abs(data_[i * d_ + j] - other.data_[i * d_ + j]);
    m = std::max(m, s);
  }
  return m;
}

}  // namespace spo
