// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <string>

#include "spectral_optim/bounds.hpp"
#include "spectral_optim/error.hpp"

namespace spo {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::SimplexSmallestIndex: return "simplex";
    case Method::SimplexPivot: return "simplex-pivot";
    case Method::Greedy: return "greedy";
    case Method::SelectiveGreedy: return "selective-greedy";
  }
  return "unknown";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::BoundCertified: return "bound-certified";
    case Status::MaxIters: return "max-iters";
    case Status::ReducibleDetected: return "reducible-detected";
    case Status::CycleDetected: return "cycle-detected";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "selective-greedy") return Method::SelectiveGreedy;
  if (text == "greedy") return Method::Greedy;
  if (text == "simplex" || text == "simplex-smallest-index") {
    return Method::SimplexSmallestIndex;
  }
  if (text == "simplex-pivot") return Method::SimplexPivot;
  throw Error(ErrorCode::Parse, "unknown method '" + std::string(text) + "'");
}

void OptimizerConfig::validate() const {
  power.validate();
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta must be > 0");
  if (!(zero_tol >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "zero_tol must be >= 0");
  }
  if (max_outer_iters < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_outer_iters must be >= 1");
  }
  if (!(reducibility_alpha > 0.0 && reducibility_alpha < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "reducibility_alpha must lie in (0, 1)");
  }
}

GreedyStep greedy_step(const NonNegativeMatrix& a, std::span<const double> v,
                       const ProductFamily& family, Direction dir, double delta) {
  GreedyStep step{a, {}};
  for (std::size_t i = 0; i < family.d; ++i) {
    const Vector b = best_row(family.sets[i], v, dir);
    const double cand = dot(b, v);
    const double cur = dot(a.row(i), v);
    if (improves(dir, cand, cur) && std::abs(cand - cur) >= delta) {
      step.matrix.set_row(i, b);
      step.changed.push_back(i);
    }
  }
  return step;
}

std::uint64_t matrix_signature(const NonNegativeMatrix& a) {
  // FNV-1a over the quantized entries.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(a.dim());
  for (double x : a.data()) {
    const double q = std::nearbyint(x * 1e12) + 0.0;  // folds -0 into +0
    mix(std::bit_cast<std::uint64_t>(q));
  }
  return h;
}

bool detect_cycle(std::span<const std::uint64_t> signatures,
                  std::span<const double> rhos, Direction dir, double delta) {
  if (signatures.size() < 2 || rhos.size() != signatures.size()) return false;
  const std::size_t last = signatures.size() - 1;
  for (std::size_t j = last; j-- > 0;) {
    if (signatures[j] != signatures[last]) continue;
    double gain = 0.0;
    for (std::size_t k = j + 1; k <= last; ++k) {
      gain = std::max(gain, dir == Direction::Max ? rhos[k] - rhos[j]
                                                  : rhos[j] - rhos[k]);
    }
    if (gain <= delta) return true;
  }
  return false;
}

bool CycleDetector::observe(std::uint64_t signature, double rho) {
  sigs_.push_back(signature);
  rhos_.push_back(rho);
  return detect_cycle(sigs_, rhos_, dir_, delta_);
}

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  std::size_t row;
  Vector best;
  double ratio;  // s_i in max mode, t_i in min mode
};

NonNegativeMatrix initial_matrix(const ProductFamily& family, Direction dir,
                                 const RunOptions& opts) {
  if (opts.start) {
    const auto& s = *opts.start;
    if (s.dim() != family.d) {
      throw Error(ErrorCode::InvalidArgument, "start matrix has wrong dimension");
    }
    for (std::size_t i = 0; i < family.d; ++i) {
      if (!family.sets[i].contains(s.row(i), 1e-9)) {
        throw Error(ErrorCode::InvalidArgument,
                    "start matrix row " + std::to_string(i) + " is not in its set");
      }
    }
    return s;
  }
  const Vector ones(family.d, 1.0);
  NonNegativeMatrix a(family.d);
  for (std::size_t i = 0; i < family.d; ++i) {
    a.set_row(i, best_row(family.sets[i], ones, dir));
  }
  return a;
}

// One-row move for the spectral simplex method, or nullopt at a fixed point.
std::optional<Candidate> simplex_move(const NonNegativeMatrix& a,
                                      std::span<const double> v,
                                      const ProductFamily& family,
                                      const OptimizerConfig& cfg) {
  const Direction dir = cfg.direction;
  std::optional<Candidate> chosen;
  for (std::size_t i = 0; i < family.d; ++i) {
    Vector b = best_row(family.sets[i], v, dir);
    const double cand = dot(b, v);
    const double cur = dot(a.row(i), v);
    if (!improves(dir, cand, cur) || std::abs(cand - cur) < cfg.delta) continue;
    double ratio;
    if (v[i] <= cfg.zero_tol) {
      ratio = dir == Direction::Max ? (cand > 0.0 ? kInfinity : 0.0) : kInfinity;
    } else {
      ratio = cand / v[i];
    }
    if (cfg.method != Method::SimplexPivot) return Candidate{i, std::move(b), ratio};
    if (!chosen || improves(dir, ratio, chosen->ratio)) {
      chosen = Candidate{i, std::move(b), ratio};
    }
  }
  return chosen;
}

bool strictly_positive(std::span<const double> v, double zero_tol) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x > zero_tol; });
}

double bound_gap(const OptimizationResult& r) {
  return r.direction == Direction::Max ? r.s_bound - r.rho : r.rho - r.t_bound;
}

OptimizationResult run(const ProductFamily& family, const OptimizerConfig& cfg,
                       const RunOptions& opts,
                       const testing::EigenSelector& selector) {
  family.validate();
  cfg.validate();
  const Direction dir = cfg.direction;
  const bool greedy = cfg.method == Method::Greedy ||
                      cfg.method == Method::SelectiveGreedy;

  NonNegativeMatrix a = initial_matrix(family, dir, opts);
  CycleDetector cycles(dir, cfg.delta);

  OptimizationResult res;
  res.direction = dir;
  std::optional<Eigenpair> prev;
  std::optional<OptimizationResult> best;

  auto snapshot = [&](const NonNegativeMatrix& m, const Eigenpair& eig,
                      double s, double t) {
    res.matrix = m;
    res.rho = eig.rho;
    res.eigenvector = eig.v;
    res.s_bound = s;
    res.t_bound = t;
  };

  for (int k = 1; k <= cfg.max_outer_iters; ++k) {
    const auto t0 = Clock::now();
    Eigenpair eig = selector(a, prev ? &*prev : nullptr);
    const std::span<const double> v = eig.v;
    const double s = upper_bound_s(a, v, family, cfg.zero_tol);
    const double t = lower_bound_t(a, v, family, cfg.zero_tol);
    if (opts.on_iterate) opts.on_iterate(k, a, eig);

    if (opts.record_contraction && prev && !res.trace.empty()) {
      const Vector u = left_eigenvector(a, cfg.power);
      res.trace.back().contraction = contraction_factor(u, prev->v);
    }

    IterationRecord rec;
    rec.iter = k;
    rec.rho = eig.rho;
    rec.s_bound = s;
    rec.t_bound = t;
    res.iterations = k;

    if (!best || improves(dir, eig.rho, best->rho)) {
      snapshot(a, eig, s, t);
      best = res;
    }

    if (cycles.observe(matrix_signature(a), eig.rho)) {
      rec.time_s = std::chrono::duration<double>(Clock::now() - t0).count();
      res.trace.push_back(std::move(rec));
      const int iters = res.iterations;
      IterationTrace trace = std::move(res.trace);
      res = *best;
      res.trace = std::move(trace);
      res.iterations = iters;
      res.status = Status::CycleDetected;
      return res;
    }

    NonNegativeMatrix next = a;
    if (greedy) {
      GreedyStep step = greedy_step(a, v, family, dir, cfg.delta);
      next = std::move(step.matrix);
      rec.rows_changed = std::move(step.changed);
    } else if (auto move = simplex_move(a, v, family, cfg)) {
      next.set_row(move->row, move->best);
      rec.rows_changed.push_back(move->row);
    }
    rec.time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool fixed_point = rec.rows_changed.empty();
    res.trace.push_back(std::move(rec));

    if (fixed_point) {
      snapshot(a, eig, s, t);
      res.status = (dir == Direction::Max && !strictly_positive(v, cfg.zero_tol))
                       ? Status::ReducibleDetected
                       : Status::Optimal;
      return res;
    }
    snapshot(a, eig, s, t);
    prev = std::move(eig);
    a = std::move(next);
  }

  const double scale = std::max(1.0, std::abs(res.rho));
  res.status = bound_gap(res) <= 1e-6 * scale ? Status::BoundCertified
                                              : Status::MaxIters;
  return res;
}

testing::EigenSelector default_selector(const OptimizerConfig& cfg) {
  if (cfg.method == Method::Greedy) {
    // Plain greedy: any leading eigenvector will do; warm-starting from the
    // previous one is the natural choice and is generally not the selected one.
    return [pc = cfg.power](const NonNegativeMatrix& a, const Eigenpair* prev) {
      if (!prev) return selected_eigenpair(a, pc);
      try {
        return eigenpair_from(a, prev->v, pc);
      } catch (const PowerNotConverged&) {
        return selected_eigenpair(a, pc);
      }
    };
  }
  return [pc = cfg.power](const NonNegativeMatrix& a, const Eigenpair*) {
    return selected_eigenpair(a, pc);
  };
}

OptimizationResult run_with_remedy(const ProductFamily& family,
                                   const OptimizerConfig& cfg,
                                   const RunOptions& opts) {
  OptimizationResult first = run(family, cfg, opts, default_selector(cfg));
  if (first.status != Status::ReducibleDetected) return first;
  return detect_and_remedy_reducibility(family, cfg, std::move(first));
}

// Row of the original set that a perturbed row came from.
Vector unperturb_row(const RowSet& set, std::span<const double> row, double alpha,
                     std::size_t shift) {
  Vector a(row.begin(), row.end());
  a[shift] -= alpha;
  for (double& x : a) x = std::max(0.0, x / (1.0 - alpha));
  if (const auto* fin = set.as<FiniteSet>()) {
    // Snap to the nearest listed row to undo rounding.
    const Vector* nearest = &fin->rows.front();
    double best = kInfinity;
    for (const auto& r : fin->rows) {
      double dist = 0.0;
      for (std::size_t j = 0; j < a.size(); ++j) dist += std::abs(r[j] - a[j]);
      if (dist < best) {
        best = dist;
        nearest = &r;
      }
    }
    return *nearest;
  }
  return a;
}

}  // namespace

OptimizationResult optimize(const ProductFamily& family, const OptimizerConfig& cfg,
                            const RunOptions& opts) {
  return run_with_remedy(family, cfg, opts);
}

OptimizationResult selective_greedy(const ProductFamily& family,
                                    const OptimizerConfig& cfg,
                                    const RunOptions& opts) {
  OptimizerConfig c = cfg;
  c.method = Method::SelectiveGreedy;
  return run_with_remedy(family, c, opts);
}

OptimizationResult spectral_simplex(const ProductFamily& family,
                                    const OptimizerConfig& cfg,
                                    const RunOptions& opts) {
  OptimizerConfig c = cfg;
  if (c.method != Method::SimplexPivot) c.method = Method::SimplexSmallestIndex;
  return run_with_remedy(family, c, opts);
}

ProductFamily perturb_family(const ProductFamily& family, double alpha) {
  family.validate();
  if (alpha == 0.0) return family;
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1)");
  }
  ProductFamily out;
  out.d = family.d;
  for (std::size_t i = 0; i < family.d; ++i) {
    const std::size_t shift = (i + 1) % family.d;
    const RowSet& set = family.sets[i];
    if (const auto* fin = set.as<FiniteSet>()) {
      std::vector<Vector> rows = fin->rows;
      for (auto& r : rows) {
        for (double& x : r) x *= (1.0 - alpha);
        r[shift] += alpha;
      }
      out.sets.push_back(RowSet::finite(std::move(rows)));
    } else {
      out.sets.push_back(RowSet::perturbed(set, alpha, shift));
    }
  }
  return out;
}

OptimizationResult detect_and_remedy_reducibility(const ProductFamily& family,
                                                  const OptimizerConfig& cfg,
                                                  OptimizationResult first) {
  const double alpha = cfg.reducibility_alpha;
  const ProductFamily perturbed = perturb_family(family, alpha);
  const OptimizationResult retry =
      run(perturbed, cfg, RunOptions{}, default_selector(cfg));

  NonNegativeMatrix recovered(family.d);
  for (std::size_t i = 0; i < family.d; ++i) {
    recovered.set_row(i, unperturb_row(family.sets[i], retry.matrix.row(i), alpha,
                                       (i + 1) % family.d));
  }
  const Eigenpair eig = selected_eigenpair(recovered, cfg.power);

  OptimizationResult out = std::move(first);
  out.unperturbed_rho = out.rho;
  out.perturbed_rho = retry.rho;
  const int offset = out.iterations;
  for (IterationRecord rec : retry.trace) {
    rec.iter += offset;
    rec.perturbed = true;
    out.trace.push_back(std::move(rec));
  }
  out.iterations = offset + retry.iterations;
  if (improves(cfg.direction, eig.rho, out.rho)) {
    out.matrix = recovered;
    out.rho = eig.rho;
    out.eigenvector = eig.v;
    out.s_bound = upper_bound_s(recovered, eig.v, family, cfg.zero_tol);
    out.t_bound = lower_bound_t(recovered, eig.v, family, cfg.zero_tol);
  }
  out.status = Status::ReducibleDetected;
  return out;
}

BruteForceResult brute_force_optimum(const ProductFamily& family, Direction dir,
                                     std::size_t limit) {
  family.validate();
  if (!family.all_finite()) {
    throw Error(ErrorCode::InvalidArgument, "brute force needs all-finite row sets");
  }
  std::vector<const FiniteSet*> sets;
  double count = 1.0;
  for (const auto& s : family.sets) {
    sets.push_back(s.as<FiniteSet>());
    count *= static_cast<double>(sets.back()->rows.size());
  }
  if (count > static_cast<double>(limit)) {
    throw Error(ErrorCode::SizeLimit, "family has more than " + std::to_string(limit) +
                                          " members");
  }

  PowerConfig pc;
  pc.eps = 1e-12;
  pc.max_iters = 200000;

  const std::size_t d = family.d;
  std::vector<std::size_t> idx(d, 0);
  NonNegativeMatrix a(d);
  for (std::size_t i = 0; i < d; ++i) a.set_row(i, sets[i]->rows[0]);

  std::optional<BruteForceResult> best;
  while (true) {
    double rho;
    try {
      rho = selected_eigenpair(a, pc).rho;
    } catch (const PowerNotConverged& e) {
      rho = e.last_rho();
    }
    if (!best || improves(dir, rho, best->rho)) best = BruteForceResult{a, rho, idx};

    // Odometer, last row fastest: lexicographic order of index tuples.
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++idx[i] < sets[i]->rows.size()) {
        a.set_row(i, sets[i]->rows[idx[i]]);
        break;
      }
      idx[i] = 0;
      a.set_row(i, sets[i]->rows[0]);
      if (i == 0) return *best;
    }
  }
}

double linear_rate_bound(const ProductFamily& family) {
  family.validate();
  double m = kInfinity;
  double big = 0.0;
  for (const auto& s : family.sets) {
    const auto* fin = s.as<FiniteSet>();
    if (!fin) {
      throw Error(ErrorCode::InvalidArgument, "rate bound needs all-finite row sets");
    }
    for (const auto& r : fin->rows) {
      for (double x : r) {
        m = std::min(m, x);
        big = std::max(big, x);
      }
    }
  }
  if (!(m > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rate bound needs strictly positive entries");
  }
  const double d = static_cast<double>(family.d);
  return 1.0 - (m * m) / (m * m + (d - 1.0) * big * big);
}

double contraction_factor(std::span<const double> u_next, std::span<const double> v_k) {
  if (u_next.size() != v_k.size()) {
    throw Error(ErrorCode::InvalidArgument, "eigenvector lengths differ");
  }
  const double uv = dot(u_next, v_k);
  if (!(uv > 0.0)) throw Error(ErrorCode::Degenerate, "degenerate eigenvector pair");
  double m = 0.0;
  for (std::size_t j = 0; j < v_k.size(); ++j) m = std::max(m, u_next[j] * v_k[j]);
  return 1.0 - m / uv;
}

namespace testing {

OptimizationResult optimize_with_selector(const ProductFamily& family,
                                          const OptimizerConfig& cfg,
                                          const RunOptions& opts,
                                          const EigenSelector& selector) {
  return run(family, cfg, opts, selector);
}

}  // namespace testing

}  // namespace spo
