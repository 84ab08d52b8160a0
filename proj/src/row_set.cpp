// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/row_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectral_optim/error.hpp"
#include "spectral_optim/lp.hpp"

namespace spo {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}

void require_nonnegative(std::span<const double> x, const char* what) {
  for (double xi : x) {
    if (!(xi >= 0.0) || !std::isfinite(xi)) {
      invalid(std::string(what) + " must be finite and non-negative");
    }
  }
}

// Coordinate order by v, descending or ascending, lowest index first on ties.
std::vector<std::size_t> order_by(std::span<const double> v, bool descending) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return descending ? v[a] > v[b] : v[a] < v[b];
  });
  return idx;
}

Vector best_finite(const FiniteSet& s, std::span<const double> v, Direction dir) {
  std::size_t best = 0;
  double best_val = dot(s.rows[0], v);
  for (std::size_t k = 1; k < s.rows.size(); ++k) {
    const double val = dot(s.rows[k], v);
    if (improves(dir, val, best_val)) {
      best = k;
      best_val = val;
    }
  }
  return s.rows[best];
}

Vector best_graph(const GraphDegreeSet& s, std::span<const double> v,
                  Direction dir) {
  const std::size_t d = v.size();
  if (s.sense == DegreeSense::AtMost && dir == Direction::Min) {
    return Vector(d, 0.0);
  }
  if (s.sense == DegreeSense::AtLeast && dir == Direction::Max) {
    return Vector(d, 1.0);
  }
  Vector x(d, 0.0);
  const auto idx = order_by(v, dir == Direction::Max);
  for (std::size_t k = 0; k < s.n; ++k) x[idx[k]] = 1.0;
  return x;
}

Vector best_l1(const L1BallSet& s, std::span<const double> v, Direction dir) {
  Vector x = s.center;
  if (dir == Direction::Max) {
    // Every unit of budget is worth v_j on coordinate j; spend it all on the
    // best one. Decreasing a coordinate never helps since v >= 0.
    const auto j = static_cast<std::size_t>(
        std::max_element(v.begin(), v.end()) - v.begin());
    x[j] += s.radius;
    return x;
  }
  // Minimization: only decreases help, and a unit removed from coordinate j
  // saves v_j, so cut the largest-v coordinates first. Budget spent on
  // coordinates with v_j = 0 saves nothing.
  double budget = s.radius;
  for (std::size_t j : order_by(v, true)) {
    if (budget <= 0.0 || !(v[j] > 0.0)) break;
    const double cut = std::min(budget, x[j]);
    x[j] -= cut;
    budget -= cut;
  }
  return x;
}

Vector best_poly(const HalfspacePolySet& s, std::span<const double> v,
                 Direction dir) {
  const std::size_t d = v.size();
  LinearProgram lp;
  lp.objective.assign(v.begin(), v.end());
  lp.lower.assign(d, 0.0);
  lp.upper.assign(d, 1.0);
  lp.sense = dir;
  for (const auto& b : s.normals) lp.constraints.push_back({b, 1.0});
  Vector x = lp_optimize(lp).x;
  for (double& xi : x) xi = std::max(xi, 0.0);
  return x;
}

Vector best_ellipsoid(const EllipsoidSet& s, std::span<const double> v,
                      Direction dir) {
  // Support point of c + r*D*B: c +- r * D^2 v / |D v|.
  const std::size_t d = v.size();
  Vector w(d);
  double scale = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double dv = s.axes[j] * v[j];
    scale += dv * dv;
    w[j] = s.axes[j] * dv;
  }
  scale = s.radius / std::sqrt(scale);
  const double sign = dir == Direction::Max ? 1.0 : -1.0;
  Vector x(d);
  for (std::size_t j = 0; j < d; ++j) {
    x[j] = std::max(0.0, s.center[j] + sign * scale * w[j]);
  }
  return x;
}

}  // namespace

RowSet RowSet::finite(std::vector<Vector> rows) {
  if (rows.empty()) invalid("finite row set needs at least one row");
  const std::size_t d = rows.front().size();
  if (d == 0) invalid("rows must have length >= 1");
  for (const auto& r : rows) {
    if (r.size() != d) invalid("finite row set has rows of different lengths");
    require_nonnegative(r, "finite rows");
  }
  return RowSet(d, FiniteSet{std::move(rows)});
}

RowSet RowSet::graph_degree(std::size_t d, std::size_t n, DegreeSense sense) {
  if (d == 0) invalid("dimension must be >= 1");
  if (n < 1 || n > d) {
    invalid("graph degree must lie in [1, " + std::to_string(d) + "]");
  }
  return RowSet(d, GraphDegreeSet{n, sense});
}

RowSet RowSet::l1_ball(Vector center, double radius) {
  if (center.empty()) invalid("l1 ball center must be non-empty");
  require_nonnegative(center, "l1 ball center");
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    invalid("l1 ball radius must be finite and >= 0");
  }
  const std::size_t d = center.size();
  return RowSet(d, L1BallSet{std::move(center), radius});
}

RowSet RowSet::halfspace_poly(std::size_t d, std::vector<Vector> normals) {
  if (d == 0) invalid("dimension must be >= 1");
  for (const auto& b : normals) {
    if (b.size() != d) invalid("polyhedron normal has wrong length");
    require_nonnegative(b, "polyhedron normals");
  }
  return RowSet(d, HalfspacePolySet{std::move(normals)});
}

RowSet RowSet::ellipsoid(Vector center, double radius, Vector axes) {
  if (center.empty() || axes.size() != center.size()) {
    invalid("ellipsoid center and axes must have equal non-zero length");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    invalid("ellipsoid radius must be > 0");
  }
  for (std::size_t j = 0; j < center.size(); ++j) {
    if (!(axes[j] > 0.0) || !std::isfinite(axes[j]) ||
        !std::isfinite(center[j])) {
      invalid("ellipsoid axes must be positive");
    }
    if (!(center[j] - radius * axes[j] > 0.0)) {
      invalid("ellipsoid must lie inside the positive orthant");
    }
  }
  const std::size_t d = center.size();
  return RowSet(d, EllipsoidSet{std::move(center), radius, std::move(axes)});
}

RowSet RowSet::perturbed(RowSet base, double alpha, std::size_t shift_index) {
  if (!(alpha >= 0.0 && alpha < 1.0)) invalid("alpha must lie in [0, 1)");
  const std::size_t d = base.dim();
  if (shift_index >= d) invalid("shift index out of range");
  return RowSet(d, PerturbedSet{std::make_shared<const RowSet>(std::move(base)),
                                alpha, shift_index});
}

bool RowSet::contains(std::span<const double> x, double tol) const {
  if (x.size() != d_) return false;
  for (double xi : x) {
    if (!(xi >= -tol)) return false;
  }
  return std::visit(
      overloaded{
          [&](const FiniteSet& s) {
            return std::any_of(s.rows.begin(), s.rows.end(), [&](const Vector& r) {
              for (std::size_t j = 0; j < d_; ++j) {
                if (std::abs(r[j] - x[j]) > tol) return false;
              }
              return true;
            });
          },
          [&](const GraphDegreeSet& s) {
            double sum = 0.0;
            for (double xi : x) {
              if (xi > 1.0 + tol) return false;
              sum += xi;
            }
            const auto n = static_cast<double>(s.n);
            return s.sense == DegreeSense::AtMost ? sum <= n + tol
                                                  : sum >= n - tol;
          },
          [&](const L1BallSet& s) {
            double dist = 0.0;
            for (std::size_t j = 0; j < d_; ++j) dist += std::abs(x[j] - s.center[j]);
            return dist <= s.radius + tol;
          },
          [&](const HalfspacePolySet& s) {
            for (double xi : x) {
              if (xi > 1.0 + tol) return false;
            }
            return std::all_of(s.normals.begin(), s.normals.end(),
                               [&](const Vector& b) { return dot(b, x) <= 1.0 + tol; });
          },
          [&](const EllipsoidSet& s) {
            double q = 0.0;
            for (std::size_t j = 0; j < d_; ++j) {
              const double z = (x[j] - s.center[j]) / (s.radius * s.axes[j]);
              q += z * z;
            }
            return q <= 1.0 + tol;
          },
          [&](const PerturbedSet& s) {
            Vector a(x.begin(), x.end());
            a[s.shift_index] -= s.alpha;
            for (double& ai : a) ai /= (1.0 - s.alpha);
            return s.base->contains(a, tol / (1.0 - s.alpha));
          },
      },
      v_);
}

bool RowSet::operator==(const RowSet& other) const {
  if (d_ != other.d_ || v_.index() != other.v_.index()) return false;
  return std::visit(
      overloaded{
          [&](const FiniteSet& s) { return s.rows == std::get<FiniteSet>(other.v_).rows; },
          [&](const GraphDegreeSet& s) {
            const auto& o = std::get<GraphDegreeSet>(other.v_);
            return s.n == o.n && s.sense == o.sense;
          },
          [&](const L1BallSet& s) {
            const auto& o = std::get<L1BallSet>(other.v_);
            return s.center == o.center && s.radius == o.radius;
          },
          [&](const HalfspacePolySet& s) {
            return s.normals == std::get<HalfspacePolySet>(other.v_).normals;
          },
          [&](const EllipsoidSet& s) {
            const auto& o = std::get<EllipsoidSet>(other.v_);
            return s.center == o.center && s.radius == o.radius && s.axes == o.axes;
          },
          [&](const PerturbedSet& s) {
            const auto& o = std::get<PerturbedSet>(other.v_);
            return s.alpha == o.alpha && s.shift_index == o.shift_index &&
                   *s.base == *o.base;
          },
      },
      v_);
}

Vector best_row(const RowSet& set, std::span<const double> v, Direction dir) {
  if (v.size() != set.dim()) {
    throw Error(ErrorCode::InvalidArgument, "objective vector has wrong length");
  }
  bool nonzero = false;
  for (double vi : v) {
    if (!(vi >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "objective vector must be non-negative");
    }
    nonzero = nonzero || vi > 0.0;
  }
  if (!nonzero) throw Error(ErrorCode::Degenerate, "degenerate objective");

  return std::visit(
      overloaded{
          [&](const FiniteSet& s) { return best_finite(s, v, dir); },
          [&](const GraphDegreeSet& s) { return best_graph(s, v, dir); },
          [&](const L1BallSet& s) { return best_l1(s, v, dir); },
          [&](const HalfspacePolySet& s) { return best_poly(s, v, dir); },
          [&](const EllipsoidSet& s) { return best_ellipsoid(s, v, dir); },
          [&](const PerturbedSet& s) {
            Vector a = best_row(*s.base, v, dir);
            for (double& ai : a) ai *= (1.0 - s.alpha);
            a[s.shift_index] += s.alpha;
            return a;
          },
      },
      set.variant());
}

void ProductFamily::validate() const {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "family dimension must be >= 1");
  if (sets.size() != d) {
    throw Error(ErrorCode::InvalidArgument,
                "family of dimension " + std::to_string(d) + " has " +
                    std::to_string(sets.size()) + " row sets");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (sets[i].dim() != d) {
      throw Error(ErrorCode::InvalidArgument,
                  "row set " + std::to_string(i) + " has dimension " +
                      std::to_string(sets[i].dim()) + ", expected " +
                      std::to_string(d));
    }
  }
}

bool ProductFamily::all_finite() const {
  return std::all_of(sets.begin(), sets.end(),
                     [](const RowSet& s) { return s.as<FiniteSet>() != nullptr; });
}

}  // namespace spo
