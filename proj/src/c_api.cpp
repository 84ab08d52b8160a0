// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/spectral_optim.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "spectral_optim/applications.hpp"
#include "spectral_optim/bench.hpp"
#include "spectral_optim/error.hpp"
#include "spectral_optim/family_io.hpp"
#include "spectral_optim/perron.hpp"
#include "spectral_optim/random.hpp"
#include "spectral_optim/worked_examples.hpp"

struct spo_family {
  spo::ProductFamily value;
};

struct spo_matrix {
  spo::NonNegativeMatrix value;
};

struct spo_result {
  spo::OptimizationResult value;
};

namespace {

thread_local std::string g_last_error;

spo_status to_status(spo::ErrorCode code) {
  switch (code) {
    case spo::ErrorCode::InvalidArgument: return SPO_ERR_INVALID_ARGUMENT;
    case spo::ErrorCode::Parse: return SPO_ERR_PARSE;
    case spo::ErrorCode::Io: return SPO_ERR_IO;
    case spo::ErrorCode::NotConverged: return SPO_ERR_NOT_CONVERGED;
    case spo::ErrorCode::Infeasible: return SPO_ERR_INFEASIBLE;
    case spo::ErrorCode::Unbounded: return SPO_ERR_UNBOUNDED;
    case spo::ErrorCode::Degenerate: return SPO_ERR_DEGENERATE;
    case spo::ErrorCode::SizeLimit: return SPO_ERR_SIZE_LIMIT;
    case spo::ErrorCode::Internal: return SPO_ERR_INTERNAL;
  }
  return SPO_ERR_INTERNAL;
}

spo_status fail(spo_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
spo_status guarded(F&& body) {
  try {
    body();
    return SPO_OK;
  } catch (const spo::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SPO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SPO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SPO_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw spo::Error(spo::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

spo::Direction direction_of(int d) {
  require(d == SPO_MAXIMIZE || d == SPO_MINIMIZE, "unknown direction");
  return d == SPO_MAXIMIZE ? spo::Direction::Max : spo::Direction::Min;
}

spo::Method method_of(int m) {
  switch (m) {
    case SPO_METHOD_SIMPLEX: return spo::Method::SimplexSmallestIndex;
    case SPO_METHOD_SIMPLEX_PIVOT: return spo::Method::SimplexPivot;
    case SPO_METHOD_GREEDY: return spo::Method::Greedy;
    case SPO_METHOD_SELECTIVE_GREEDY: return spo::Method::SelectiveGreedy;
    default: throw spo::Error(spo::ErrorCode::InvalidArgument, "unknown method");
  }
}

spo::FamilyKind kind_of(int k) {
  switch (k) {
    case SPO_FAMILY_POSITIVE: return spo::FamilyKind::Positive;
    case SPO_FAMILY_SPARSE: return spo::FamilyKind::Sparse;
    case SPO_FAMILY_POLYHEDRAL: return spo::FamilyKind::Polyhedral;
    default: throw spo::Error(spo::ErrorCode::InvalidArgument, "unknown family kind");
  }
}

spo::OptimizerConfig config_of(const spo_config* c) {
  spo::OptimizerConfig cfg;
  if (c) {
    cfg.direction = direction_of(c->direction);
    cfg.method = method_of(c->method);
    cfg.power.eps = c->power_eps;
    cfg.power.max_iters = c->power_max_iters;
    cfg.power.zero_tol = c->zero_tol;
    cfg.delta = c->delta;
    cfg.zero_tol = c->zero_tol;
    cfg.max_outer_iters = c->max_outer_iters;
    cfg.reducibility_alpha = c->reducibility_alpha;
  }
  cfg.validate();
  return cfg;
}

int run_status_code(spo::Status s) {
  switch (s) {
    case spo::Status::Optimal: return SPO_RUN_OPTIMAL;
    case spo::Status::BoundCertified: return SPO_RUN_BOUND_CERTIFIED;
    case spo::Status::MaxIters: return SPO_RUN_MAX_ITERS;
    case spo::Status::ReducibleDetected: return SPO_RUN_REDUCIBLE_DETECTED;
    case spo::Status::CycleDetected: return SPO_RUN_CYCLE_DETECTED;
  }
  return SPO_RUN_MAX_ITERS;
}

void fill_info(const spo::StabilizationResult& r, spo_stabilization_info* info) {
  if (!info) return;
  info->r_star = r.r_star;
  info->rho_x = r.rho_x;
  info->rho_a = r.rho_a;
  info->r_lo = r.r_lo;
  info->r_hi = r.r_hi;
  info->bisection_steps = r.bisection_steps;
}

}  // namespace

extern "C" {

const char* spo_version(void) { return "1.0.0"; }

const char* spo_last_error(void) { return g_last_error.c_str(); }

const char* spo_status_name(spo_status status) {
  switch (status) {
    case SPO_OK: return "ok";
    case SPO_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SPO_ERR_PARSE: return "parse-error";
    case SPO_ERR_IO: return "io-error";
    case SPO_ERR_NOT_CONVERGED: return "not-converged";
    case SPO_ERR_INFEASIBLE: return "infeasible";
    case SPO_ERR_UNBOUNDED: return "unbounded";
    case SPO_ERR_DEGENERATE: return "degenerate";
    case SPO_ERR_SIZE_LIMIT: return "size-limit";
    case SPO_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* spo_run_status_name(int run_status) {
  switch (run_status) {
    case SPO_RUN_OPTIMAL: return "optimal";
    case SPO_RUN_BOUND_CERTIFIED: return "bound-certified";
    case SPO_RUN_MAX_ITERS: return "max-iters";
    case SPO_RUN_REDUCIBLE_DETECTED: return "reducible-detected";
    case SPO_RUN_CYCLE_DETECTED: return "cycle-detected";
    default: return "unknown";
  }
}

void spo_string_free(char* s) { std::free(s); }

void spo_config_default(spo_config* cfg) {
  if (!cfg) return;
  const spo::OptimizerConfig d;
  cfg->direction = SPO_MAXIMIZE;
  cfg->method = SPO_METHOD_SELECTIVE_GREEDY;
  cfg->power_eps = d.power.eps;
  cfg->power_max_iters = d.power.max_iters;
  cfg->delta = d.delta;
  cfg->zero_tol = d.zero_tol;
  cfg->max_outer_iters = d.max_outer_iters;
  cfg->reducibility_alpha = d.reducibility_alpha;
}

void spo_bench_spec_default(spo_bench_spec* spec) {
  if (!spec) return;
  const spo::BenchSpec d;
  *spec = spo_bench_spec{};
  spec->density_lo = d.density.lo;
  spec->density_hi = d.density.hi;
  spec->kind = SPO_FAMILY_SPARSE;
  spec->trials = d.trials;
  spec->seed = d.seed;
  spec->direction = SPO_MAXIMIZE;
  spec->method = SPO_METHOD_SELECTIVE_GREEDY;
}

spo_status spo_family_from_json(const char* json, spo_family** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new spo_family{spo::parse_family(json)};
  });
}

spo_status spo_family_load(const char* path, spo_family** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new spo_family{spo::load_family(path)};
  });
}

spo_status spo_family_to_json(const spo_family* f, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = dup_string(spo::family_to_json(f->value));
  });
}

spo_status spo_family_save(const spo_family* f, const char* path) {
  return guarded([&] {
    require(f && path, "null argument");
    spo::save_family(f->value, path);
  });
}

spo_status spo_family_random(size_t d, size_t n, double density_lo, double density_hi,
                             uint64_t seed, int kind, spo_family** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new spo_family{spo::generate_random_family(
        d, n, spo::DensityInterval{density_lo, density_hi}, seed, kind_of(kind))};
  });
}

spo_status spo_family_graph(const size_t* degrees, size_t d, int direction,
                            spo_family** out) {
  return guarded([&] {
    require(degrees && out, "null argument");
    spo::DegreeSpec spec{{degrees, degrees + d}, direction_of(direction)};
    *out = new spo_family{spo::graph_family(spec)};
  });
}

size_t spo_family_dim(const spo_family* f) { return f ? f->value.d : 0; }

void spo_family_free(spo_family* f) { delete f; }

spo_status spo_matrix_create(size_t d, const double* entries, spo_matrix** out) {
  return guarded([&] {
    require(entries && out, "null argument");
    *out = new spo_matrix{spo::NonNegativeMatrix(d, spo::Vector(entries, entries + d * d))};
  });
}

spo_status spo_matrix_from_json(const char* json, spo_matrix** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new spo_matrix{spo::parse_matrix(json)};
  });
}

spo_status spo_matrix_load(const char* path, spo_matrix** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new spo_matrix{spo::load_matrix(path)};
  });
}

spo_status spo_matrix_to_json(const spo_matrix* m, char** out) {
  return guarded([&] {
    require(m && out, "null argument");
    *out = dup_string(spo::matrix_to_json(m->value));
  });
}

spo_status spo_matrix_save(const spo_matrix* m, const char* path) {
  return guarded([&] {
    require(m && path, "null argument");
    spo::save_matrix(m->value, path);
  });
}

size_t spo_matrix_dim(const spo_matrix* m) { return m ? m->value.dim() : 0; }

spo_status spo_matrix_copy_entries(const spo_matrix* m, double* buf, size_t len) {
  return guarded([&] {
    require(m && buf, "null argument");
    const auto& data = m->value.data();
    require(len >= data.size(), "buffer too small");
    std::copy(data.begin(), data.end(), buf);
  });
}

void spo_matrix_free(spo_matrix* m) { delete m; }

spo_status spo_eigenpair(const spo_matrix* m, double eps, double* rho, double* v) {
  return guarded([&] {
    require(m && rho, "null argument");
    spo::PowerConfig cfg;
    cfg.eps = eps;
    cfg.validate();
    const spo::Eigenpair p = spo::selected_eigenpair(m->value, cfg);
    *rho = p.rho;
    if (v) std::copy(p.v.begin(), p.v.end(), v);
  });
}

spo_status spo_optimize(const spo_family* f, const spo_config* cfg, spo_result** out) {
  return spo_optimize_from(f, cfg, nullptr, out);
}

spo_status spo_optimize_from(const spo_family* f, const spo_config* cfg,
                             const spo_matrix* start, spo_result** out) {
  return guarded([&] {
    require(f && out, "null argument");
    spo::RunOptions opts;
    if (start) opts.start = start->value;
    *out = new spo_result{spo::optimize(f->value, config_of(cfg), opts)};
  });
}

spo_status spo_graph(const size_t* degrees, size_t d, const spo_config* cfg,
                     spo_result** out) {
  return guarded([&] {
    require(degrees && out, "null argument");
    const spo::OptimizerConfig c = config_of(cfg);
    spo::DegreeSpec spec{{degrees, degrees + d}, c.direction};
    spo::GraphResult g = spo::optimize_graph(spec, c);
    *out = new spo_result{std::move(g.run)};
  });
}

spo_status spo_demo_cycling(const spo_config* cfg, spo_result** adversarial,
                            spo_result** selective) {
  return guarded([&] {
    require(adversarial && selective, "null argument");
    spo::CyclingDemo demo = spo::run_cycling_demo(config_of(cfg));
    auto* a = new spo_result{std::move(demo.adversarial)};
    try {
      *selective = new spo_result{std::move(demo.selective)};
    } catch (...) {
      delete a;
      throw;
    }
    *adversarial = a;
  });
}

double spo_result_rho(const spo_result* r) { return r ? r->value.rho : 0.0; }

int spo_result_status(const spo_result* r) {
  return r ? run_status_code(r->value.status) : SPO_RUN_MAX_ITERS;
}

int spo_result_iterations(const spo_result* r) { return r ? r->value.iterations : 0; }

int spo_result_direction(const spo_result* r) {
  return r && r->value.direction == spo::Direction::Min ? SPO_MINIMIZE : SPO_MAXIMIZE;
}

void spo_result_bounds(const spo_result* r, double* t_bound, double* s_bound) {
  if (!r) return;
  if (t_bound) *t_bound = r->value.t_bound;
  if (s_bound) *s_bound = r->value.s_bound;
}

int spo_result_reducibility(const spo_result* r, double* unperturbed_rho,
                            double* perturbed_rho) {
  if (!r || !r->value.unperturbed_rho || !r->value.perturbed_rho) return 0;
  if (unperturbed_rho) *unperturbed_rho = *r->value.unperturbed_rho;
  if (perturbed_rho) *perturbed_rho = *r->value.perturbed_rho;
  return 1;
}

spo_status spo_result_matrix(const spo_result* r, spo_matrix** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = new spo_matrix{r->value.matrix};
  });
}

spo_status spo_result_eigenvector(const spo_result* r, double* v, size_t len) {
  return guarded([&] {
    require(r && v, "null argument");
    require(len >= r->value.eigenvector.size(), "buffer too small");
    std::copy(r->value.eigenvector.begin(), r->value.eigenvector.end(), v);
  });
}

size_t spo_result_trace_length(const spo_result* r) {
  return r ? r->value.trace.size() : 0;
}

spo_status spo_result_trace_csv(const spo_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup_string(spo::trace_to_csv(r->value.trace));
  });
}

spo_status spo_result_to_json(const spo_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup_string(spo::result_to_json(r->value));
  });
}

void spo_result_free(spo_result* r) { delete r; }

spo_status spo_closest_stable(const spo_matrix* a, double target, double r_tol,
                              const spo_config* cfg, spo_matrix** x,
                              spo_stabilization_info* info) {
  return guarded([&] {
    require(a != nullptr, "null argument");
    const spo::StabilizationResult r =
        spo::closest_stable({a->value, target, r_tol}, config_of(cfg));
    fill_info(r, info);
    if (x) *x = new spo_matrix{r.x};
  });
}

spo_status spo_closest_unstable(const spo_matrix* a, double target, double r_tol,
                                const spo_config* cfg, spo_matrix** x,
                                spo_stabilization_info* info) {
  return guarded([&] {
    require(a != nullptr, "null argument");
    const spo::StabilizationResult r =
        spo::closest_unstable({a->value, target, r_tol}, config_of(cfg));
    fill_info(r, info);
    if (x) *x = new spo_matrix{r.x};
  });
}

spo_status spo_benchmark(const spo_bench_spec* spec, char** text, char** csv) {
  return guarded([&] {
    require(spec && spec->dims && spec->sizes, "null argument");
    spo::BenchSpec b;
    b.dims.assign(spec->dims, spec->dims + spec->n_dims);
    b.set_sizes.assign(spec->sizes, spec->sizes + spec->n_sizes);
    b.density = {spec->density_lo, spec->density_hi};
    b.kind = kind_of(spec->kind);
    b.trials = spec->trials;
    b.seed = spec->seed;
    b.direction = direction_of(spec->direction);
    b.method = method_of(spec->method);
    b.threads = spec->threads;
    const auto cells = spo::run_benchmark(b);
    char* t = text ? dup_string(spo::bench_to_text(cells, b)) : nullptr;
    try {
      if (csv) *csv = dup_string(spo::bench_to_csv(cells));
    } catch (...) {
      std::free(t);
      throw;
    }
    if (text) *text = t;
  });
}

}  // extern "C"
