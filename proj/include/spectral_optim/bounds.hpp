// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spectral_optim/matrix.hpp"
#include "spectral_optim/row_set.hpp"

namespace spo {

/// s_i = max_{b in F_i} (b, v) / v_i, or +inf when v_i <= zero_tol.
double row_upper_ratio(const RowSet& set, std::span<const double> v, std::size_t i,
                       double zero_tol);

/// t_i = min_{b in F_i} (b, v) / v_i, or +inf when v_i <= zero_tol.
double row_lower_ratio(const RowSet& set, std::span<const double> v, std::size_t i,
                       double zero_tol);

/// A-posteriori upper bound s(A) = max_i s_i for rho_max; may be +inf.
/// Valid for any v >= 0 whose zero pattern is flagged by zero_tol.
double upper_bound_s(const NonNegativeMatrix& a, std::span<const double> v,
                     const ProductFamily& family, double zero_tol = 1e-12);

/// A-posteriori lower bound t(A) = min_i t_i for rho_min; may be +inf.
double lower_bound_t(const NonNegativeMatrix& a, std::span<const double> v,
                     const ProductFamily& family, double zero_tol = 1e-12);

}  // namespace spo
