// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/applications.hpp"

#include <cmath>
#include <string>

#include "spectral_optim/error.hpp"

namespace spo {

ProductFamily graph_family(const DegreeSpec& spec) {
  const std::size_t d = spec.degrees.size();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "degree list is empty");
  const DegreeSense sense = spec.direction == Direction::Max ? DegreeSense::AtMost
                                                             : DegreeSense::AtLeast;
  ProductFamily f;
  f.d = d;
  for (std::size_t n : spec.degrees) f.sets.push_back(RowSet::graph_degree(d, n, sense));
  return f;
}

GraphResult optimize_graph(const DegreeSpec& spec, OptimizerConfig cfg) {
  cfg.direction = spec.direction;
  OptimizationResult run = selective_greedy(graph_family(spec), cfg);
  return GraphResult{run.matrix, run.rho, std::move(run)};
}

ProductFamily linf_ball_family(const NonNegativeMatrix& a, double r) {
  ProductFamily f;
  f.d = a.dim();
  for (std::size_t i = 0; i < f.d; ++i) {
    const auto row = a.row(i);
    f.sets.push_back(RowSet::l1_ball(Vector(row.begin(), row.end()), r));
  }
  return f;
}

namespace {

// Pulls each row of x toward the matching row of a until it lies within
// l1-distance r. Convex combinations of non-negative rows stay non-negative.
NonNegativeMatrix clip_to_ball(const NonNegativeMatrix& x, const NonNegativeMatrix& a,
                               double r) {
  const std::size_t d = a.dim();
  NonNegativeMatrix out = x;
  Vector row(d);
  for (std::size_t i = 0; i < d; ++i) {
    double dist = 0.0;
    for (std::size_t j = 0; j < d; ++j) dist += std::abs(x(i, j) - a(i, j));
    if (dist <= r) continue;
    const double lambda = r / dist;
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = std::max(0.0, a(i, j) + lambda * (x(i, j) - a(i, j)));
    }
    out.set_row(i, row);
  }
  return out;
}

void validate(const StabilizationProblem& p) {
  if (!(p.target > 0.0)) throw Error(ErrorCode::InvalidArgument, "target must be > 0");
  if (!(p.r_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "r_tol must be > 0");
}

template <class Predicate>
StabilizationResult bisect(const StabilizationProblem& p, OptimizerConfig cfg,
                           double hi, NonNegativeMatrix x_hi, double rho_hi,
                           Predicate meets_target) {
  StabilizationResult res;
  res.rho_a = selected_eigenpair(p.a, cfg.power).rho;
  double lo = 0.0;
  NonNegativeMatrix warm = x_hi;
  while (hi - lo > p.r_tol) {
    const double mid = 0.5 * (lo + hi);
    RunOptions opts;
    opts.start = clip_to_ball(warm, p.a, mid);
    const OptimizationResult run = optimize(linf_ball_family(p.a, mid), cfg, opts);
    warm = run.matrix;
    if (meets_target(run.rho)) {
      hi = mid;
      x_hi = run.matrix;
      rho_hi = run.rho;
    } else {
      lo = mid;
    }
    ++res.bisection_steps;
  }
  res.x = std::move(x_hi);
  res.rho_x = rho_hi;
  res.r_lo = lo;
  res.r_hi = hi;
  res.r_star = hi;
  return res;
}

}  // namespace

StabilizationResult closest_stable(const StabilizationProblem& p, OptimizerConfig cfg) {
  validate(p);
  cfg.direction = Direction::Min;
  cfg.method = Method::SelectiveGreedy;
  const double rho_a = selected_eigenpair(p.a, cfg.power).rho;
  if (rho_a <= p.target) {
    return StabilizationResult{p.a, 0.0, rho_a, rho_a, 0.0, 0.0, 0};
  }
  // At r = |A|_inf the zero matrix is admissible.
  return bisect(p, cfg, p.a.norm_inf(), NonNegativeMatrix(p.a.dim()), 0.0,
                [&](double rho) { return rho <= p.target; });
}

StabilizationResult closest_unstable(const StabilizationProblem& p,
                                     OptimizerConfig cfg) {
  validate(p);
  cfg.direction = Direction::Max;
  cfg.method = Method::SelectiveGreedy;
  const double rho_a = selected_eigenpair(p.a, cfg.power).rho;
  if (rho_a >= p.target) {
    return StabilizationResult{p.a, 0.0, rho_a, rho_a, 0.0, 0.0, 0};
  }
  constexpr double kSlack = 1e-6;
  auto meets = [&](double rho) { return rho >= p.target - kSlack; };
  // Putting the whole budget r on one entry per row gives a matrix that
  // dominates r times a 0/1 matrix with a cycle, so r = target suffices; grow
  // the bracket in case the inner run lands short of that.
  double hi = p.target;
  OptimizationResult run = optimize(linf_ball_family(p.a, hi), cfg);
  for (int k = 0; !meets(run.rho) && k < 60; ++k) {
    hi *= 2.0;
    run = optimize(linf_ball_family(p.a, hi), cfg);
  }
  if (!meets(run.rho)) {
    throw Error(ErrorCode::Internal, "could not bracket the destabilizing radius");
  }
  return bisect(p, cfg, hi, run.matrix, run.rho, meets);
}

}  // namespace spo
