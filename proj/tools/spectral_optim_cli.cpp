// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C interface.

#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spectral_optim/spectral_optim.h"

namespace {

struct Failure {
  spo_status status;
  bool reported = false;
};

void check(spo_status s) {
  if (s != SPO_OK) throw Failure{s};
}

struct Deleter {
  void operator()(spo_family* p) const { spo_family_free(p); }
  void operator()(spo_matrix* p) const { spo_matrix_free(p); }
  void operator()(spo_result* p) const { spo_result_free(p); }
  void operator()(char* p) const { spo_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

void write_file(const std::string& path, const std::string& text) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: io-error: cannot write '%s'\n", path.c_str());
    throw Failure{SPO_ERR_IO, true};
  }
  std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
}

std::vector<double> entries_of(const spo_matrix* m) {
  const size_t d = spo_matrix_dim(m);
  std::vector<double> buf(d * d);
  check(spo_matrix_copy_entries(m, buf.data(), buf.size()));
  return buf;
}

void print_matrix(const spo_matrix* m, bool binary) {
  const size_t d = spo_matrix_dim(m);
  const auto e = entries_of(m);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      if (binary) {
        std::printf("%d", e[i * d + j] != 0.0 ? 1 : 0);
      } else {
        std::printf(j ? " %.6g" : "%.6g", e[i * d + j]);
      }
    }
    std::printf("\n");
  }
}

std::string bound_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void print_result(const spo_result* r) {
  double t = 0, s = 0;
  spo_result_bounds(r, &t, &s);
  std::printf("rho = %.6g, status = %s, iters = %d\n", spo_result_rho(r),
              spo_run_status_name(spo_result_status(r)), spo_result_iterations(r));
  std::printf("rho (full precision) = %.17g\n", spo_result_rho(r));
  std::printf("bounds: t = %s, s = %s\n", bound_text(t).c_str(), bound_text(s).c_str());
  double unpert = 0, pert = 0;
  if (spo_result_reducibility(r, &unpert, &pert)) {
    std::printf("reducible: unperturbed rho = %.10g, perturbed rho = %.10g\n", unpert,
                pert);
  }
}

int direction_code(const std::string& s) { return s == "min" ? SPO_MINIMIZE : SPO_MAXIMIZE; }

int method_code(const std::string& s) {
  if (s == "greedy") return SPO_METHOD_GREEDY;
  if (s == "simplex" || s == "simplex-smallest-index") return SPO_METHOD_SIMPLEX;
  if (s == "simplex-pivot") return SPO_METHOD_SIMPLEX_PIVOT;
  return SPO_METHOD_SELECTIVE_GREEDY;
}

std::pair<double, double> parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const double x = std::stod(text);
      return {x, x};
    }
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception&) {
    std::fprintf(stderr, "error: invalid-argument: bad density interval '%s'\n",
                 text.c_str());
    throw Failure{SPO_ERR_INVALID_ARGUMENT, true};
  }
}

const std::vector<std::string> kDirections{"max", "min"};
const std::vector<std::string> kMethods{"selective-greedy", "greedy", "simplex",
                                        "simplex-smallest-index", "simplex-pivot"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radius optimization over product families of non-negative matrices"};
  app.require_subcommand(1);

  spo_config cfg;
  spo_config_default(&cfg);
  std::string direction = "max";
  std::string method = "selective-greedy";

  auto* optimize = app.add_subcommand("optimize", "Optimize rho over a family file");
  std::string family_path, out_path, trace_path, json_path, start_path;
  optimize->add_option("--family", family_path, "Family JSON file")->required();
  optimize->add_option("--direction", direction)->check(CLI::IsMember(kDirections));
  optimize->add_option("--method", method)->check(CLI::IsMember(kMethods));
  optimize->add_option("--eps", cfg.power_eps, "Power-method tolerance");
  optimize->add_option("--delta", cfg.delta, "Minimal accepted row improvement");
  optimize->add_option("--max-iter", cfg.max_outer_iters, "Outer iteration cap");
  optimize->add_option("--start", start_path, "Start matrix JSON file");
  optimize->add_option("--trace", trace_path, "Write the iteration trace as CSV");
  optimize->add_option("--out", out_path, "Write the optimal matrix as JSON");
  optimize->add_option("--json", json_path, "Write a result summary as JSON");

  auto* graph = app.add_subcommand("graph", "Extremal spectral radius for a degree sequence");
  std::string degrees_text;
  graph->add_option("--degrees", degrees_text, "Comma-separated degree bounds")->required();
  graph->add_option("--direction", direction)->check(CLI::IsMember(kDirections));
  graph->add_option("--out", out_path, "Write the adjacency matrix as JSON");

  auto* stabilize = app.add_subcommand("stabilize", "Closest Schur-stable matrix");
  std::string matrix_path;
  double target = 1.0, rtol = 1e-6;
  bool unstable = false;
  stabilize->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  stabilize->add_option("--target", target, "Target spectral radius");
  stabilize->add_option("--rtol", rtol, "Bisection tolerance on r");
  stabilize->add_flag("--unstable", unstable, "Find the closest matrix with rho >= target");
  stabilize->add_option("--out", out_path, "Write X as JSON");

  auto* bench = app.add_subcommand("bench", "Iteration-count benchmark on random families");
  std::string dims_text = "25,100", sizes_text = "50,100", density_text = "0.09:0.15";
  std::string kind = "sparse", csv_path;
  int trials = 10;
  uint64_t seed = 42;
  unsigned threads = 0;
  bench->add_option("--dims", dims_text, "Comma-separated dimensions");
  bench->add_option("--sizes", sizes_text, "Comma-separated set sizes N");
  bench->add_option("--density", density_text, "Sparse density interval lo:hi");
  bench->add_option("--kind", kind)->check(
      CLI::IsMember({"positive", "sparse", "polyhedral"}));
  bench->add_option("--trials", trials)->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);
  bench->add_option("--threads", threads, "Worker threads (0: auto)");
  bench->add_option("--direction", direction)->check(CLI::IsMember(kDirections));
  bench->add_option("--method", method)->check(CLI::IsMember(kMethods));
  bench->add_option("--csv", csv_path, "Write the table as CSV");

  auto* demo = app.add_subcommand("demo-cycling",
                                  "Cycling of plain greedy versus the selective method");

  CLI11_PARSE(app, argc, argv);

  auto parse_sizes = [](const std::string& text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        size_t pos = 0;
        const long long v = std::stoll(item, &pos);
        if (pos != item.size() || v < 0) throw std::invalid_argument(item);
        out.push_back(static_cast<size_t>(v));
      } catch (const std::exception&) {
        std::fprintf(stderr, "error: invalid-argument: bad integer list '%s'\n",
                     text.c_str());
        throw Failure{SPO_ERR_INVALID_ARGUMENT, true};
      }
    }
    return out;
  };

  cfg.direction = direction_code(direction);
  cfg.method = method_code(method);

  try {
    if (*optimize) {
      spo_family* fp = nullptr;
      check(spo_family_load(family_path.c_str(), &fp));
      Owned<spo_family> family(fp);
      Owned<spo_matrix> start;
      if (!start_path.empty()) {
        spo_matrix* sp = nullptr;
        check(spo_matrix_load(start_path.c_str(), &sp));
        start.reset(sp);
      }
      spo_result* rp = nullptr;
      check(spo_optimize_from(family.get(), &cfg, start.get(), &rp));
      Owned<spo_result> result(rp);
      print_result(result.get());
      if (!trace_path.empty()) {
        char* csv = nullptr;
        check(spo_result_trace_csv(result.get(), &csv));
        Owned<char> guard(csv);
        write_file(trace_path, csv);
      }
      if (!json_path.empty()) {
        char* js = nullptr;
        check(spo_result_to_json(result.get(), &js));
        Owned<char> guard(js);
        write_file(json_path, std::string(js) + "\n");
      }
      spo_matrix* mp = nullptr;
      check(spo_result_matrix(result.get(), &mp));
      Owned<spo_matrix> m(mp);
      if (!out_path.empty()) {
        check(spo_matrix_save(m.get(), out_path.c_str()));
      } else {
        print_matrix(m.get(), false);
      }
    } else if (*graph) {
      const auto degrees = parse_sizes(degrees_text);
      spo_result* rp = nullptr;
      check(spo_graph(degrees.data(), degrees.size(), &cfg, &rp));
      Owned<spo_result> result(rp);
      std::printf("rho = %.6g\n", spo_result_rho(result.get()));
      std::printf("rho (full precision) = %.17g\n", spo_result_rho(result.get()));
      spo_matrix* mp = nullptr;
      check(spo_result_matrix(result.get(), &mp));
      Owned<spo_matrix> m(mp);
      print_matrix(m.get(), true);
      if (!out_path.empty()) check(spo_matrix_save(m.get(), out_path.c_str()));
    } else if (*stabilize) {
      spo_matrix* ap = nullptr;
      check(spo_matrix_load(matrix_path.c_str(), &ap));
      Owned<spo_matrix> a(ap);
      spo_matrix* xp = nullptr;
      spo_stabilization_info info{};
      check(unstable ? spo_closest_unstable(a.get(), target, rtol, &cfg, &xp, &info)
                     : spo_closest_stable(a.get(), target, rtol, &cfg, &xp, &info));
      Owned<spo_matrix> x(xp);
      std::printf("r = %.6g\n", info.r_star);
      std::printf("rho(A) = %.10g\n", info.rho_a);
      std::printf("rho(X) = %.10g\n", info.rho_x);
      std::printf("bisection steps = %d\n", info.bisection_steps);
      if (!out_path.empty()) {
        check(spo_matrix_save(x.get(), out_path.c_str()));
      } else {
        print_matrix(x.get(), false);
      }
    } else if (*bench) {
      const auto dims = parse_sizes(dims_text);
      const auto sizes = parse_sizes(sizes_text);
      const auto [lo, hi] = parse_interval(density_text);
      spo_bench_spec spec;
      spo_bench_spec_default(&spec);
      spec.dims = dims.data();
      spec.n_dims = dims.size();
      spec.sizes = sizes.data();
      spec.n_sizes = sizes.size();
      spec.density_lo = lo;
      spec.density_hi = hi;
      spec.kind = kind == "positive"     ? SPO_FAMILY_POSITIVE
                  : kind == "polyhedral" ? SPO_FAMILY_POLYHEDRAL
                                         : SPO_FAMILY_SPARSE;
      spec.trials = trials;
      spec.seed = seed;
      spec.threads = threads;
      spec.direction = cfg.direction;
      spec.method = cfg.method;
      char* text = nullptr;
      char* csv = nullptr;
      check(spo_benchmark(&spec, &text, csv_path.empty() ? nullptr : &csv));
      Owned<char> text_guard(text), csv_guard(csv);
      std::fputs(text, stdout);
      if (csv) write_file(csv_path, csv);
    } else if (*demo) {
      spo_result* ap = nullptr;
      spo_result* sp = nullptr;
      check(spo_demo_cycling(&cfg, &ap, &sp));
      Owned<spo_result> adversarial(ap), selective(sp);
      std::printf("greedy with adversarial eigenvectors:\n");
      print_result(adversarial.get());
      std::printf("selective greedy:\n");
      print_result(selective.get());
      spo_matrix* mp = nullptr;
      check(spo_result_matrix(selective.get(), &mp));
      Owned<spo_matrix> m(mp);
      print_matrix(m.get(), false);
    }
  } catch (const Failure& f) {
    if (!f.reported) {
      std::fprintf(stderr, "error: %s: %s\n", spo_status_name(f.status), spo_last_error());
    }
    return static_cast<int>(f.status);
  }
  return 0;
}
