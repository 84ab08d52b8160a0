// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <variant>
#include <vector>

#include "spectral_optim/matrix.hpp"

namespace spo {

class RowSet;

/// Explicit list of admissible rows.
struct FiniteSet {
  std::vector<Vector> rows;
};

enum class DegreeSense { AtMost, AtLeast };

/// 0/1 rows of length d with at most (or at least) n ones; the LP relaxation
/// {sum x <= n, 0 <= x <= 1} has exactly these vertices.
struct GraphDegreeSet {
  std::size_t n = 1;
  DegreeSense sense = DegreeSense::AtMost;
};

/// {x >= 0 : sum_j |x_j - center_j| <= radius}
struct L1BallSet {
  Vector center;
  double radius = 0.0;
};

/// {x : (x, b_j) <= 1 for every normal b_j, 0 <= x_i <= 1}
struct HalfspacePolySet {
  std::vector<Vector> normals;
};

/// Axis-aligned ellipsoid {center + radius * diag(axes) * u : |u|_2 <= 1}.
struct EllipsoidSet {
  Vector center;
  double radius = 1.0;
  Vector axes;
};

/// Image of `base` under a -> (1 - alpha) a + alpha e_{shift_index}.
struct PerturbedSet {
  std::shared_ptr<const RowSet> base;
  double alpha = 0.0;
  std::size_t shift_index = 0;
};

/// One uncertainty set F_i of admissible rows, all of ambient dimension dim().
class RowSet {
 public:
  using Variant = std::variant<FiniteSet, GraphDegreeSet, L1BallSet,
                               HalfspacePolySet, EllipsoidSet, PerturbedSet>;

  // Validating factories; they throw spo::Error(InvalidArgument) on bad data.
  static RowSet finite(std::vector<Vector> rows);
  static RowSet graph_degree(std::size_t d, std::size_t n, DegreeSense sense);
  static RowSet l1_ball(Vector center, double radius);
  static RowSet halfspace_poly(std::size_t d, std::vector<Vector> normals);
  static RowSet ellipsoid(Vector center, double radius, Vector axes);
  static RowSet perturbed(RowSet base, double alpha, std::size_t shift_index);

  std::size_t dim() const noexcept { return d_; }
  const Variant& variant() const noexcept { return v_; }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(&v_);
  }

  /// Membership within an absolute tolerance on every defining constraint.
  bool contains(std::span<const double> x, double tol = 1e-12) const;

  bool operator==(const RowSet& other) const;

 private:
  RowSet(std::size_t d, Variant v) : d_(d), v_(std::move(v)) {}

  std::size_t d_ = 0;
  Variant v_;
};

/// Optimizer of (a, v) over the set. Ties resolve to the lowest index
/// (first listed row, lowest coordinate). Throws Error(Degenerate) when v is
/// the zero vector.
Vector best_row(const RowSet& set, std::span<const double> v, Direction dir);

/// F_1 x ... x F_d.
struct ProductFamily {
  std::size_t d = 0;
  std::vector<RowSet> sets;

  /// Throws spo::Error unless sets.size() == d and every set has dimension d.
  void validate() const;

  bool all_finite() const;
  bool operator==(const ProductFamily&) const = default;
};

}  // namespace spo
