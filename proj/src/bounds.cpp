// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/bounds.hpp"

#include <algorithm>

#include "spectral_optim/error.hpp"

namespace spo {

double row_upper_ratio(const RowSet& set, std::span<const double> v, std::size_t i,
                       double zero_tol) {
  if (v[i] <= zero_tol) return kInfinity;
  return dot(best_row(set, v, Direction::Max), v) / v[i];
}

double row_lower_ratio(const RowSet& set, std::span<const double> v, std::size_t i,
                       double zero_tol) {
  if (v[i] <= zero_tol) return kInfinity;
  return dot(best_row(set, v, Direction::Min), v) / v[i];
}

namespace {

void check_shapes(const NonNegativeMatrix& a, std::span<const double> v,
                  const ProductFamily& family) {
  family.validate();
  if (a.dim() != family.d || v.size() != family.d) {
    throw Error(ErrorCode::InvalidArgument, "bound inputs have mismatched dimensions");
  }
}

}  // namespace

// The matrix itself does not enter the formula; it is taken so callers pass the
// (A, v) pair that v belongs to and shapes can be checked together.
double upper_bound_s(const NonNegativeMatrix& a, std::span<const double> v,
                     const ProductFamily& family, double zero_tol) {
  check_shapes(a, v, family);
  double s = 0.0;
  for (std::size_t i = 0; i < family.d; ++i) {
    s = std::max(s, row_upper_ratio(family.sets[i], v, i, zero_tol));
  }
  return s;
}

double lower_bound_t(const NonNegativeMatrix& a, std::span<const double> v,
                     const ProductFamily& family, double zero_tol) {
  check_shapes(a, v, family);
  double t = kInfinity;
  for (std::size_t i = 0; i < family.d; ++i) {
    t = std::min(t, row_lower_ratio(family.sets[i], v, i, zero_tol));
  }
  return t;
}

}  // namespace spo
