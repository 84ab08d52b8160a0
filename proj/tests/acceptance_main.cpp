// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails. A single criterion can be selected
// with `--only N`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spectral_optim/applications.hpp"
#include "spectral_optim/bench.hpp"
#include "spectral_optim/bounds.hpp"
#include "spectral_optim/error.hpp"
#include "spectral_optim/lp.hpp"
#include "spectral_optim/optimizer.hpp"
#include "spectral_optim/perron.hpp"
#include "spectral_optim/random.hpp"
#include "spectral_optim/worked_examples.hpp"
#include "support/oracles.hpp"

namespace {

using namespace spo;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (failures_ <= 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
  Outcome outcome() const {
    std::string d = notes_.str();
    if (failures_ > 5) d += "; ... " + std::to_string(failures_ - 5) + " more";
    return {failures_ == 0, d};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

std::string fmt(double x, int prec = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, x);
  return buf;
}

constexpr double kTightEps = 1e-12;

OptimizerConfig tight(Direction dir, Method m) {
  OptimizerConfig c;
  c.direction = dir;
  c.method = m;
  c.power.eps = kTightEps;
  return c;
}

// ---------------------------------------------------------------------------
Outcome criterion1() {
  Checker c;
  const CyclingDemo demo = run_cycling_demo();
  const auto& sel = demo.selective;
  c.expect(std::abs(sel.rho - 12.0) <= 1e-9, "selective rho = " + fmt(sel.rho));
  c.expect(sel.matrix(0, 0) == 12.0 && sel.matrix(0, 1) == 0.0 && sel.matrix(0, 2) == 0.0,
           "first row is not (12,0,0)");
  c.expect(sel.iterations <= 4, "iterations = " + std::to_string(sel.iterations));
  c.expect(sel.status == Status::Optimal, "selective status " + std::string(to_string(sel.status)));
  const auto& adv = demo.adversarial;
  c.expect(adv.status == Status::CycleDetected,
           "adversarial status " + std::string(to_string(adv.status)));
  c.expect(std::abs(adv.rho - 10.0) <= 1e-9, "adversarial best rho = " + fmt(adv.rho));
  c.expect(std::abs(adv.s_bound - 12.5) <= 1e-9, "adversarial s = " + fmt(adv.s_bound));
  c.note("selective rho=" + fmt(sel.rho) + " iters=" + std::to_string(sel.iterations) +
         "; greedy+hook cycle at iter " + std::to_string(adv.iterations) + ", best " +
         fmt(adv.rho) + ", s=" + fmt(adv.s_bound));
  return c.outcome();
}

// Shared between criteria 2 and 6.
struct OracleRun {
  ProductFamily family;
  Direction dir;
  Method method;
  double rho_opt;
  OptimizationResult result;
  std::vector<double> s_trace;
  std::vector<double> t_trace;
  std::vector<double> rho_trace;
};

std::vector<OracleRun>& oracle_runs() {
  static std::vector<OracleRun> runs = [] {
    std::vector<OracleRun> out;
    std::mt19937_64 rng(20260401);
    const Method methods[] = {Method::SelectiveGreedy, Method::SimplexSmallestIndex,
                              Method::SimplexPivot, Method::Greedy};
    for (int f = 0; f < 200; ++f) {
      const std::size_t d = 1 + rng() % 6;
      const std::size_t n = 1 + rng() % 3;
      const bool sparse = f % 2 == 0;
      const ProductFamily fam = generate_random_family(
          d, n, DensityInterval{0.09, 0.6}, rng(),
          sparse ? FamilyKind::Sparse : FamilyKind::Positive);
      for (Direction dir : {Direction::Max, Direction::Min}) {
        const double opt = oracle::brute_force_rho(fam, dir);
        for (Method m : methods) {
          OracleRun r{fam, dir, m, opt, {}, {}, {}, {}};
          r.result = optimize(fam, tight(dir, m));
          for (const auto& rec : r.result.trace) {
            r.s_trace.push_back(rec.s_bound);
            r.t_trace.push_back(rec.t_bound);
            r.rho_trace.push_back(rec.rho);
          }
          out.push_back(std::move(r));
        }
      }
    }
    return out;
  }();
  return runs;
}

Outcome criterion2() {
  Checker c;
  double worst = 0.0;
  int compared = 0;
  for (const auto& r : oracle_runs()) {
    if (r.method == Method::Greedy) continue;
    const double diff = std::abs(r.result.rho - r.rho_opt);
    worst = std::max(worst, diff);
    ++compared;
    c.expect(diff <= 1e-8, std::string(to_string(r.method)) + "/" +
                               std::string(to_string(r.dir)) + " d=" +
                               std::to_string(r.family.d) + " diff " + fmt(diff, 3));
  }
  // The library's own enumeration must agree with the dense-eigensolver oracle.
  double oracle_gap = 0.0;
  for (std::size_t k = 0; k < oracle_runs().size(); k += 4) {
    const auto& r = oracle_runs()[k];
    oracle_gap = std::max(oracle_gap,
                          std::abs(r.rho_opt - brute_force_optimum(r.family, r.dir).rho));
  }
  c.expect(oracle_gap <= 1e-8, "brute force disagrees with dense eigensolver by " +
                                   fmt(oracle_gap, 3));
  c.note(std::to_string(compared) + " runs, max |drho| = " + fmt(worst, 3) +
         ", oracle vs eigensolver " + fmt(oracle_gap, 3));
  return c.outcome();
}

Outcome criterion6() {
  Checker c;
  std::size_t records = 0;
  for (const auto& r : oracle_runs()) {
    // Retry iterates are bounded by the optimum of the perturbed family.
    std::optional<double> perturbed_opt;
    for (std::size_t k = 0; k < r.rho_trace.size(); ++k) {
      ++records;
      const double rho = r.rho_trace[k], s = r.s_trace[k], t = r.t_trace[k];
      double opt = r.rho_opt;
      if (r.result.trace[k].perturbed) {
        if (!perturbed_opt) {
          perturbed_opt = oracle::brute_force_rho(
              perturb_family(r.family, OptimizerConfig{}.reducibility_alpha), r.dir);
        }
        opt = *perturbed_opt;
      }
      // v is accurate to the power tolerance, so the ratios in s and t carry
      // the eigenpair residual bound 10 * eps * max(1, rho).
      const double ulp = 10.0 * kTightEps * std::max(1.0, rho);
      c.expect(t <= rho + ulp && rho <= s + ulp, "sandwich t=" + fmt(t) + " rho=" + fmt(rho) +
                                         " s=" + fmt(s));
      if (r.dir == Direction::Max) {
        c.expect(opt <= s + 1e-9, "rho_max " + fmt(opt) + " > s " + fmt(s));
      } else {
        c.expect(t <= opt + 1e-9, "t " + fmt(t) + " > rho_min " + fmt(opt));
      }
    }
  }
  c.note(std::to_string(records) + " iterates checked across " +
         std::to_string(oracle_runs().size()) + " runs (4 methods)");
  return c.outcome();
}

// ---------------------------------------------------------------------------
Outcome criterion3() {
  Checker c;
  const GraphResult g = optimize_graph({{3, 2, 3, 2, 4, 1, 1}, Direction::Max});
  c.expect(std::abs(g.rho - 3.21432) <= 1e-4, "rho = " + fmt(g.rho));
  for (std::size_t d : {1, 2, 5, 9}) {
    const GraphResult ones = optimize_graph({std::vector<std::size_t>(d, 1), Direction::Max});
    c.expect(ones.rho == 1.0, "all-1 d=" + std::to_string(d) + " rho = " + fmt(ones.rho, 17));
    const GraphResult full = optimize_graph({std::vector<std::size_t>(d, d), Direction::Max});
    c.expect(full.rho == static_cast<double>(d),
             "all-d d=" + std::to_string(d) + " rho = " + fmt(full.rho, 17));
  }
  c.note("rho = " + fmt(g.rho, 8));
  return c.outcome();
}

// ---------------------------------------------------------------------------
Outcome criterion4() {
  Checker c;
  const auto a = NonNegativeMatrix::from_rows({{0, 0, 0, 3, 5, 0, 8, 0, 0, 0},
                                               {8, 0, 0, 0, 0, 0, 0, 0, 8, 0},
                                               {0, 2, 0, 0, 0, 4, 0, 5, 0, 7},
                                               {0, 0, 0, 0, 0, 0, 0, 0, 8, 0},
                                               {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 0, 7, 0, 0, 0, 0},
                                               {0, 0, 0, 0, 6, 2, 2, 0, 1, 0},
                                               {0, 0, 0, 0, 0, 0, 1, 0, 7, 0},
                                               {0, 0, 0, 9, 5, 0, 0, 0, 1, 0},
                                               {0, 0, 0, 0, 0, 0, 3, 4, 8, 9}});
  const auto x_ref = NonNegativeMatrix::from_rows({{0, 0, 0, 3, 5, 0, 0.125, 0, 0, 0},
                                                   {0.125, 0, 0, 0, 0, 0, 0, 0, 8, 0},
                                                   {0, 2, 0, 0, 0, 4, 0, 5, 0, 0},
                                                   {0, 0, 0, 0, 0, 0, 0, 0, 0.125, 0},
                                                   {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 6, 2, 2, 0, 1, 0},
                                                   {0, 0, 0, 0, 0, 0, 1, 0, 7, 0},
                                                   {0, 0, 0, 2.125, 5, 0, 0, 0, 0, 0},
                                                   {0, 0, 0, 0, 0, 0, 3, 4, 8, 1}});
  const double d_ref = x_ref.distance_inf(a);
  const StabilizationResult r = closest_stable({a, 1.0, 1e-6});
  c.expect(std::abs(r.rho_a - 9.139125) <= 1e-4, "rho(A) = " + fmt(r.rho_a));
  const double rho_x = oracle::spectral_radius(r.x);
  c.expect(r.rho_x <= 1.0 + 1e-6, "rho(X) = " + fmt(r.rho_x));
  c.expect(rho_x <= 1.0 + 1e-6, "eigensolver rho(X) = " + fmt(rho_x));
  bool nonneg = true;
  for (double v : r.x.data()) nonneg = nonneg && v >= 0.0;
  c.expect(nonneg, "X has a negative entry");
  const double dist = r.x.distance_inf(a);
  c.expect(dist <= d_ref + 1e-3, "||X-A|| = " + fmt(dist) + " > " + fmt(d_ref) + " + 1e-3");
  c.note("rho(A)=" + fmt(r.rho_a, 8) + " rho(X)=" + fmt(r.rho_x, 8) + " ||X-A||=" +
         fmt(dist, 8) + " reference distance=" + fmt(d_ref, 8));
  return c.outcome();
}

// ---------------------------------------------------------------------------
Outcome criterion5() {
  Checker c;
  BenchSpec spec;
  spec.dims = {25, 100, 500};
  spec.set_sizes = {50, 100};
  spec.trials = 10;
  spec.seed = 42;
  spec.kind = FamilyKind::Positive;
  const auto pos = run_benchmark(spec);
  double lo = kInfinity, hi = 0.0;
  std::string table = "positive:";
  for (const auto& cell : pos) {
    c.expect(cell.failures == 0, "positive cell failed: " + cell.first_error);
    c.expect(cell.mean_iters <= 6.0, "positive d=" + std::to_string(cell.d) + " N=" +
                                         std::to_string(cell.n) + " mean " +
                                         fmt(cell.mean_iters, 3));
    lo = std::min(lo, cell.mean_iters);
    hi = std::max(hi, cell.mean_iters);
    table += " " + fmt(cell.mean_iters, 3);
  }
  c.expect(hi <= 2.0 * lo, "positive max cell " + fmt(hi, 3) + " > 2x min " + fmt(lo, 3));

  spec.kind = FamilyKind::Sparse;
  spec.density = {0.09, 0.15};
  const auto sparse = run_benchmark(spec);
  table += "; sparse:";
  for (const auto& cell : sparse) {
    c.expect(cell.failures == 0, "sparse cell failed: " + cell.first_error);
    c.expect(cell.mean_iters <= 10.0, "sparse d=" + std::to_string(cell.d) + " N=" +
                                          std::to_string(cell.n) + " mean " +
                                          fmt(cell.mean_iters, 3));
    table += " " + fmt(cell.mean_iters, 3);
  }
  c.note(table);
  return c.outcome();
}

// ---------------------------------------------------------------------------
Outcome criterion7() {
  Checker c;
  std::mt19937_64 rng(77);
  double worst = 0.0;
  int ratios = 0;
  for (int f = 0; f < 50; ++f) {
    const std::size_t d = 2 + rng() % 7;
    const std::size_t n = 2 + rng() % 3;
    const ProductFamily fam =
        generate_random_family(d, n, {}, rng(), FamilyKind::Positive);
    const double q = linear_rate_bound(fam);
    const double opt = brute_force_optimum(fam, Direction::Max).rho;
    const OptimizationResult r = optimize(fam, tight(Direction::Max, Method::SelectiveGreedy));
    for (std::size_t k = 0; k + 1 < r.trace.size(); ++k) {
      const double e0 = opt - r.trace[k].rho;
      const double e1 = opt - r.trace[k + 1].rho;
      if (e0 <= 1e-9) continue;
      const double ratio = e1 / e0;
      ++ratios;
      worst = std::max(worst, ratio - q);
      c.expect(ratio <= q + 1e-9, "ratio " + fmt(ratio) + " > q " + fmt(q));
    }
  }
  c.note(std::to_string(ratios) + " contractions, max (ratio - q) = " + fmt(worst, 3));
  return c.outcome();
}

// ---------------------------------------------------------------------------
struct OrderStats {
  std::vector<double> orders;  // log e_{k+1} / log e_k for measurable pairs
};

// Greedy error is the relative matrix distance to the limit, the quantity of
// the quadratic estimate; simplex error is the relative spectral-radius gap,
// the quantity of its linear estimate. Both runs start from the row-wise
// minimizers so the iteration has room to show its rate.
OrderStats convergence_orders(const ProductFamily& fam, Method m) {
  OptimizerConfig cfg;
  cfg.direction = Direction::Max;
  cfg.method = m;
  cfg.power.eps = 1e-14;
  cfg.delta = 1e-15;
  cfg.max_outer_iters = m == Method::SelectiveGreedy ? 40 : 1000;
  RunOptions opts;
  NonNegativeMatrix start(fam.d);
  const Vector ones(fam.d, 1.0);
  for (std::size_t i = 0; i < fam.d; ++i) {
    start.set_row(i, best_row(fam.sets[i], ones, Direction::Min));
  }
  opts.start = start;
  std::vector<NonNegativeMatrix> iterates;
  std::vector<double> rhos;
  opts.on_iterate = [&](int, const NonNegativeMatrix& a, const Eigenpair& e) {
    iterates.push_back(a);
    rhos.push_back(e.rho);
  };
  const OptimizationResult r = optimize(fam, cfg, opts);
  const double scale = r.matrix.distance_inf(NonNegativeMatrix(fam.d));
  std::vector<double> errors;
  for (std::size_t k = 0; k < iterates.size(); ++k) {
    errors.push_back(m == Method::SelectiveGreedy
                         ? iterates[k].distance_inf(r.matrix) / scale
                         : (r.rho - rhos[k]) / r.rho);
  }
  OrderStats st;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    const double e0 = errors[k], e1 = errors[k + 1];
    if (e0 < 1.0 && e1 >= 1e-12 && e1 < e0) st.orders.push_back(std::log(e1) / std::log(e0));
  }
  return st;
}

Outcome criterion8() {
  Checker c;
  std::string detail;
  double min_greedy = kInfinity, max_simplex = 0.0;
  int thin = 0;
  for (int f = 0; f < 20; ++f) {
    const std::size_t d = 3 + static_cast<std::size_t>(f % 8);
    const ProductFamily fam = generate_ellipsoid_family(d, 1000 + f);
    const OrderStats g = convergence_orders(fam, Method::SelectiveGreedy);
    const OrderStats s = convergence_orders(fam, Method::SimplexSmallestIndex);
    if (g.orders.size() < 2) ++thin;
    c.expect(!g.orders.empty(), "family " + std::to_string(f) + ": no measurable ratio");
    const std::size_t take = std::min<std::size_t>(2, g.orders.size());
    for (std::size_t k = g.orders.size() - take; k < g.orders.size(); ++k) {
      min_greedy = std::min(min_greedy, g.orders[k]);
      c.expect(g.orders[k] >= 1.8, "family " + std::to_string(f) + " greedy order " +
                                       fmt(g.orders[k], 4));
    }
    c.expect(s.orders.size() >= 2, "family " + std::to_string(f) + ": simplex too short");
    if (s.orders.size() >= 2) {
      const double tail = 0.5 * (s.orders[s.orders.size() - 1] + s.orders[s.orders.size() - 2]);
      max_simplex = std::max(max_simplex, tail);
      c.expect(tail < 1.3, "family " + std::to_string(f) + " simplex order " + fmt(tail, 4));
    }
  }
  c.note("min selective order " + fmt(min_greedy, 4) + ", max simplex order " +
         fmt(max_simplex, 4) + ", families with a single measurable ratio: " +
         std::to_string(thin));
  return c.outcome();
}

// ---------------------------------------------------------------------------
Outcome criterion9() {
  Checker c;
  std::mt19937_64 rng(9);
  int runs = 0, non_optimal = 0;
  for (int f = 0; f < 500; ++f) {
    const std::size_t d = 2 + rng() % 29;
    const std::size_t n = 2 + rng() % 9;
    const ProductFamily fam =
        generate_random_family(d, n, DensityInterval{0.05, 0.2}, rng(), FamilyKind::Sparse);
    for (Direction dir : {Direction::Max, Direction::Min}) {
      OptimizerConfig cfg;
      cfg.direction = dir;
      cfg.delta = 1e-10;
      try {
        const OptimizationResult r = selective_greedy(fam, cfg);
        ++runs;
        c.expect(r.status != Status::CycleDetected,
                 "cycle on family " + std::to_string(f) + " " + std::string(to_string(dir)));
        if (r.status != Status::Optimal) ++non_optimal;
      } catch (const std::exception& e) {
        c.expect(false, "family " + std::to_string(f) + ": " + e.what());
      }
    }
  }
  c.note(std::to_string(runs) + " runs, statuses other than optimal: " +
         std::to_string(non_optimal));
  return c.outcome();
}

// ---------------------------------------------------------------------------
Outcome criterion10() {
  Checker c;
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  int solved = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t d = 1 + rng() % 4;
    const std::size_t m = rng() % 5;
    LinearProgram lp;
    lp.sense = rng() % 2 ? Direction::Max : Direction::Min;
    lp.objective.resize(d);
    for (double& x : lp.objective) x = u(rng);
    lp.lower.assign(d, 0.0);
    lp.upper.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      lp.lower[j] = rng() % 3 == 0 ? -1.0 : 0.0;
      lp.upper[j] = lp.lower[j] + 0.5 + (u(rng) + 1.0);
    }
    for (std::size_t i = 0; i < m; ++i) {
      LinearConstraint con;
      con.normal.resize(d);
      for (double& x : con.normal) x = u(rng);
      con.rhs = u(rng);
      lp.constraints.push_back(con);
    }
    const auto ref = oracle::lp_by_vertices(lp);
    try {
      const LpSolution sol = lp_optimize(lp);
      c.expect(ref.has_value(), "solver found a point for an infeasible LP");
      if (ref) {
        worst = std::max(worst, std::abs(sol.value - ref->value));
        c.expect(std::abs(sol.value - ref->value) <= 1e-9,
                 "LP " + std::to_string(k) + " value " + fmt(sol.value) + " vs " +
                     fmt(ref->value));
        ++solved;
      }
    } catch (const Error& e) {
      c.expect(!ref.has_value() && e.code() == ErrorCode::Infeasible,
               "LP " + std::to_string(k) + ": " + e.what());
    }
  }

  BenchSpec spec;
  spec.dims = {10, 25};
  spec.set_sizes = {5, 10};
  spec.trials = 10;
  spec.seed = 42;
  spec.kind = FamilyKind::Polyhedral;
  std::string table;
  for (const auto& cell : run_benchmark(spec)) {
    c.expect(cell.failures == 0, "polyhedral cell failed: " + cell.first_error);
    c.expect(cell.mean_iters <= 8.0, "polyhedral d=" + std::to_string(cell.d) + " N=" +
                                         std::to_string(cell.n) + " mean " +
                                         fmt(cell.mean_iters, 3));
    table += " " + fmt(cell.mean_iters, 3);
  }
  c.note(std::to_string(solved) + " feasible LPs, max |dvalue| " + fmt(worst, 3) +
         "; polyhedral mean iterations:" + table);
  return c.outcome();
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
  }
  struct Entry {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> fn;
  };
  const std::vector<Entry> entries = {
      {1, "cycling fixture: selective rho = 12, greedy hook cycles", 0.1, criterion1},
      {2, "oracle equivalence on 200 random finite families", 60.0, criterion2},
      {3, "graph application", 0.1, criterion3},
      {4, "closest stable matrix on the 10x10 instance", 5.0, criterion4},
      {5, "iteration flatness on random families", 600.0, criterion5},
      {6, "bound sandwich on every iterate", 60.0, criterion6},
      {7, "linear-rate bound on positive families", 60.0, criterion7},
      {8, "quadratic convergence on ellipsoid families", 60.0, criterion8},
      {9, "no cycling on 500 sparse families", 300.0, criterion9},
      {10, "LP layer and polyhedral benchmark", 300.0, criterion10},
  };
  int failed = 0;
  for (const auto& e : entries) {
    if (only && e.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > e.limit_s) {
      o.pass = false;
      o.detail += "; runtime " + fmt(secs, 3) + " s exceeds " + fmt(e.limit_s, 3) + " s";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d: %s  %s (%.3f s) -- %s\n", e.id, o.pass ? "PASS" : "FAIL",
                e.title, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
