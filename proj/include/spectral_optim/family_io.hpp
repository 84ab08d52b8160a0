// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "spectral_optim/matrix.hpp"
#include "spectral_optim/optimizer.hpp"
#include "spectral_optim/row_set.hpp"

namespace spo {

// Family file:
//   {"d": int, "sets": [SetDesc, ...]}
//   SetDesc = {"type": "finite", "rows": [[...], ...]}
//           | {"type": "graph", "n": int, "sense": "at_most" | "at_least"}
//           | {"type": "l1ball", "center": [...], "radius": r}
//           | {"type": "poly", "normals": [[...], ...]}
//           | {"type": "ellipsoid", "center": [...], "radius": r, "axes": [...]}
//           | {"type": "perturbed", "alpha": a, "shift": j, "base": SetDesc}
// Matrix file: {"d": int, "rows": [[...], ...]}
// Parse failures throw spo::Error(ErrorCode::Parse).

ProductFamily parse_family(std::string_view json_text);
std::string family_to_json(const ProductFamily& family);
ProductFamily load_family(const std::string& path);
void save_family(const ProductFamily& family, const std::string& path);

NonNegativeMatrix parse_matrix(std::string_view json_text);
std::string matrix_to_json(const NonNegativeMatrix& m);
NonNegativeMatrix load_matrix(const std::string& path);
void save_matrix(const NonNegativeMatrix& m, const std::string& path);

/// Shortest round-trip decimal, or "inf" / "-inf".
std::string format_number(double x);

/// Columns: iter, rho, s_bound, t_bound, rows_changed, time_s. Changed rows
/// are 0-based and separated by ';'.
std::string trace_to_csv(const IterationTrace& trace);

/// Summary object with rho, status, bounds (as numbers or "inf"), iteration
/// count and the matrix.
std::string result_to_json(const OptimizationResult& result);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace spo
