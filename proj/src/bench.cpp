// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "spectral_optim/error.hpp"
#include "spectral_optim/family_io.hpp"

namespace spo {

void BenchSpec::validate() const {
  if (dims.empty() || set_sizes.empty()) {
    throw Error(ErrorCode::InvalidArgument, "bench needs at least one d and one N");
  }
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (!(density.lo > 0.0 && density.lo <= density.hi && density.hi <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "density interval must satisfy 0 < lo <= hi <= 1");
  }
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SPECTRAL_OPTIM_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct TrialOutcome {
  int iterations = 0;
  double time_s = 0.0;
  bool failed = false;
  bool optimal = false;
  std::string error;
};

}  // namespace

std::vector<BenchCell> run_benchmark(const BenchSpec& spec) {
  spec.validate();
  struct Job {
    std::size_t cell;
    std::size_t d;
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<BenchCell> cells;
  std::vector<Job> jobs;
  for (std::size_t d : spec.dims) {
    for (std::size_t n : spec.set_sizes) {
      BenchCell c;
      c.d = d;
      c.n = n;
      c.trials = spec.trials;
      c.seed = spec.seed;
      for (int t = 0; t < spec.trials; ++t) {
        jobs.push_back({cells.size(), d, n, spec.seed ^ static_cast<std::uint64_t>(t)});
      }
      cells.push_back(c);
    }
  }

  OptimizerConfig cfg;
  cfg.direction = spec.direction;
  cfg.method = spec.method;

  std::vector<TrialOutcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      TrialOutcome& out = outcomes[k];
      try {
        const ProductFamily family =
            generate_random_family(job.d, job.n, spec.density, job.seed, spec.kind);
        const auto t0 = std::chrono::steady_clock::now();
        const OptimizationResult r = optimize(family, cfg);
        out.time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        // Iterations spent on the family itself; a reducibility retry runs
        // on a perturbed family and is not counted.
        out.iterations = static_cast<int>(
            std::count_if(r.trace.begin(), r.trace.end(),
                          [](const IterationRecord& rec) { return !rec.perturbed; }));
        out.optimal = r.status == Status::Optimal;
      } catch (const std::exception& e) {
        out.failed = true;
        out.error = e.what();
      }
    }
  };
  const unsigned n_threads =
      std::min<std::size_t>(resolve_thread_count(spec.threads), jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<int> ok(cells.size(), 0);
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    BenchCell& c = cells[jobs[k].cell];
    const TrialOutcome& o = outcomes[k];
    if (o.failed) {
      if (c.failures++ == 0) c.first_error = o.error;
      continue;
    }
    ++ok[jobs[k].cell];
    c.mean_iters += o.iterations;
    c.mean_time_s += o.time_s;
    if (!o.optimal) ++c.non_optimal;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (ok[i] > 0) {
      cells[i].mean_iters /= ok[i];
      cells[i].mean_time_s /= ok[i];
    }
  }
  return cells;
}

std::string bench_to_csv(const std::vector<BenchCell>& cells) {
  std::ostringstream out;
  out << "d,N,mean_iters,mean_time_s,trials,seed\n";
  for (const auto& c : cells) {
    out << c.d << ',' << c.n << ',' << format_number(c.mean_iters) << ','
        << format_number(c.mean_time_s) << ',' << c.trials << ',' << c.seed << '\n';
  }
  return out.str();
}

std::string bench_to_text(const std::vector<BenchCell>& cells, const BenchSpec& spec) {
  std::ostringstream out;
  const char* kind = spec.kind == FamilyKind::Positive  ? "positive"
                     : spec.kind == FamilyKind::Sparse ? "sparse"
                                                       : "polyhedral";
  out << "# family=" << kind << " direction=" << to_string(spec.direction)
      << " method=" << to_string(spec.method) << " trials=" << spec.trials
      << " seed=" << spec.seed;
  if (spec.kind == FamilyKind::Sparse) {
    out << " density=" << format_number(spec.density.lo) << ':'
        << format_number(spec.density.hi);
  }
  if (spec.kind == FamilyKind::Polyhedral) {
    out << " normals=uniform(0,1]^d/unit-l2";
  }
  out << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%8s %8s %12s %14s %8s %8s\n", "d", "N", "mean_iters",
                "mean_time_s", "failed", "nonopt");
  out << line;
  for (const auto& c : cells) {
    std::snprintf(line, sizeof line, "%8zu %8zu %12.2f %14.4f %8d %8d\n", c.d, c.n,
                  c.mean_iters, c.mean_time_s, c.failures, c.non_optimal);
    out << line;
    if (!c.first_error.empty()) out << "  first error: " << c.first_error << '\n';
  }
  return out.str();
}

}  // namespace spo
