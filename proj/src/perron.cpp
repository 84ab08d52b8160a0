// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/perron.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spectral_optim/error.hpp"

namespace spo {

void PowerConfig::validate() const {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be > 0");
  if (max_iters < 0) {
    throw Error(ErrorCode::InvalidArgument, "max_iters must be >= 1");
  }
  if (!(zero_tol >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "zero_tol must be >= 0");
  }
}

double max_ratio_estimate(const NonNegativeMatrix& a, std::span<const double> v,
                          double zero_tol) {
  // Ratios are taken on v scaled to unit max, which makes them exact for
  // vectors with equal components.
  const double top = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  if (!(top > zero_tol)) return dot(v, a.multiply(v));
  Vector w(v.begin(), v.end());
  for (double& x : w) x /= top;
  const Vector aw = a.multiply(w);
  double best = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > zero_tol) {
      const double r = aw[i] / w[i];
      if (!any || r > best) best = r;
      any = true;
    }
  }
  return best;
}

namespace {

struct Iterated {
  Vector x;
  double rho = 0.0;
  int iters = 0;
  bool converged = false;
};

// Normalized power iteration on A + I. A small step alone can stop a slowly
// contracting iteration early, so convergence also requires the residual
// |Av - rho v|_inf <= eps max(1, rho) for the (v, rho) that is returned.
// Without `vanish`, v is the iterate and rho its max ratio. With it, v is the
// iterate with the flagged coordinates zeroed and rho is `known` when that
// passes the residual test, else the Rayleigh quotient.
Iterated iterate_shifted(const NonNegativeMatrix& a, Vector x, const PowerConfig& cfg,
                         const std::vector<char>* vanish = nullptr, double known = 0.0) {
  const std::size_t d = a.dim();
  double n = norm2(x);
  if (!(n > 0.0)) throw Error(ErrorCode::Degenerate, "start vector must be non-zero");
  for (double& xi : x) xi /= n;
  const int cap = cfg.resolved_max_iters(d);

  // Candidate eigenpair read off an iterate.
  auto candidate = [&](Vector v) -> std::pair<Vector, double> {
    if (!vanish) {
      const double r = max_ratio_estimate(a, v, cfg.zero_tol);
      return {std::move(v), r};
    }
    for (std::size_t i = 0; i < d; ++i) {
      if ((*vanish)[i]) v[i] = 0.0;
    }
    const double nv = norm2(v);
    if (!(nv > 0.0)) return {std::move(v), 0.0};
    for (double& vi : v) vi /= nv;
    const double r = dot(v, a.multiply(v));
    return {std::move(v), r};
  };
  auto residual = [&](const Vector& v, double r) {
    const Vector av = a.multiply(v);
    double res = 0.0;
    for (std::size_t i = 0; i < d; ++i) res = std::max(res, std::abs(av[i] - r * v[i]));
    return res;
  };

  Vector y(d);
  for (int k = 1; k <= cap; ++k) {
    for (std::size_t i = 0; i < d; ++i) y[i] = dot(a.row(i), x) + x[i];
    n = norm2(y);
    double diff = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      y[i] /= n;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    std::swap(x, y);
    if (diff <= cfg.eps) {
      auto [v, r] = candidate(x);
      if (!(norm2(v) > 0.0)) continue;
      if (vanish && residual(v, known) <= cfg.eps * std::max(1.0, known)) {
        return {std::move(v), known, k, true};
      }
      if (residual(v, r) <= cfg.eps * std::max(1.0, r)) return {std::move(v), r, k, true};
    }
  }
  auto [v, r] = candidate(std::move(x));
  return {std::move(v), r, cap, false};
}

// Strongly connected classes of the support graph (edge i -> j when
// a_ij > 0), emitted so that every class appears after all classes it
// reaches.
std::vector<std::vector<std::size_t>> support_classes(const NonNegativeMatrix& a) {
  const std::size_t d = a.dim();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(d, kUnset), low(d, 0), stack;
  std::vector<bool> on_stack(d, false);
  std::vector<std::vector<std::size_t>> classes;
  std::size_t counter = 0;
  struct Frame {
    std::size_t node;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < d; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const std::size_t u = f.node;
      if (f.next < d) {
        const std::size_t w = f.next++;
        if (a(u, w) <= 0.0) continue;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        std::vector<std::size_t> cls;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          cls.push_back(w);
        } while (w != u);
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
      }
      call.pop_back();
      if (!call.empty()) {
        const std::size_t parent = call.back().node;
        low[parent] = std::min(low[parent], low[u]);
      }
    }
  }
  return classes;
}

double class_radius(const NonNegativeMatrix& a, const std::vector<std::size_t>& cls,
                    const PowerConfig& cfg) {
  if (cls.size() == 1) return a(cls[0], cls[0]);
  NonNegativeMatrix block(cls.size());
  Vector row(cls.size());
  for (std::size_t r = 0; r < cls.size(); ++r) {
    for (std::size_t c = 0; c < cls.size(); ++c) row[c] = a(cls[r], cls[c]);
    block.set_row(r, row);
  }
  Iterated it = iterate_shifted(block, Vector(cls.size(), 1.0), cfg);
  if (!it.converged) throw PowerNotConverged(std::move(it.x), it.rho, it.iters);
  return it.rho;
}

Eigenpair finish(Iterated it) {
  if (!it.converged) throw PowerNotConverged(std::move(it.x), it.rho, it.iters);
  Eigenpair out;
  out.rho = it.rho;
  out.v = std::move(it.x);
  out.power_iters = it.iters;
  return out;
}

}  // namespace

Eigenpair eigenpair_from(const NonNegativeMatrix& a, std::span<const double> start,
                         const PowerConfig& cfg) {
  cfg.validate();
  if (start.size() != a.dim()) {
    throw Error(ErrorCode::InvalidArgument, "start vector has wrong length");
  }
  return finish(iterate_shifted(a, Vector(start.begin(), start.end()), cfg));
}

Eigenpair selected_eigenpair(const NonNegativeMatrix& a, const PowerConfig& cfg) {
  cfg.validate();
  const std::size_t d = a.dim();
  const auto classes = support_classes(a);
  if (classes.size() == 1) return finish(iterate_shifted(a, Vector(d, 1.0), cfg));

  // Reducible: rho is the largest class radius. When classes attaining it are
  // chained (index m > 1), the iteration from e converges only like 1/k; the
  // start (A - rho I)^(m-1) e has the same limit direction and converges
  // geometrically.
  std::vector<double> radius(classes.size());
  double rho = 0.0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    radius[c] = class_radius(a, classes[c], cfg);
    rho = std::max(rho, radius[c]);
  }
  const double tie = 1e-12 * std::max(1.0, rho);
  std::vector<std::size_t> class_of(d);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t i : classes[c]) class_of[i] = c;
  }
  std::vector<int> chain(classes.size(), 0);
  int index = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    int below = 0;
    for (std::size_t i : classes[c]) {
      for (std::size_t j = 0; j < d; ++j) {
        if (a(i, j) > 0.0 && class_of[j] != c) below = std::max(below, chain[class_of[j]]);
      }
    }
    chain[c] = below + (radius[c] >= rho - tie ? 1 : 0);
    index = std::max(index, chain[c]);
  }

  // The start is also filtered by (A - rho_C I) for every non-basic class
  // whose radius is close enough to rho to slow the iteration down. Both
  // filters are polynomials in A that keep the limit direction.
  Vector x(d, 1.0);
  auto apply_shifted = [&](double shift) {
    Vector y = a.multiply(x);
    for (std::size_t i = 0; i < d; ++i) y[i] -= shift * x[i];
    const double n = norm2(y);
    if (!(n > 0.0)) return false;
    for (std::size_t i = 0; i < d; ++i) x[i] = y[i] / n;
    return true;
  };
  for (int k = 1; k < index; ++k) {
    if (!apply_shifted(rho)) break;
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const bool competitor = radius[c] < rho - tie && (radius[c] + 1.0) > 0.9 * (rho + 1.0);
    if (competitor) apply_shifted(radius[c]);
  }
  // The limit vanishes exactly on vertices whose longest basic chain is
  // shorter than the index; the iteration reads v off with those cleared.
  std::vector<char> vanishing(d, 0);
  for (std::size_t i = 0; i < d; ++i) vanishing[i] = chain[class_of[i]] < index;
  Iterated it = iterate_shifted(a, std::move(x), cfg, &vanishing, rho);
  double sum = 0.0;
  for (double xi : it.x) sum += xi;
  for (double& xi : it.x) xi = std::max(0.0, sum < 0.0 ? -xi : xi);
  const double n = norm2(it.x);
  if (n > 0.0) {
    for (double& xi : it.x) xi /= n;
  }
  it.rho = std::max(0.0, it.rho);
  return finish(std::move(it));
}

Vector left_eigenvector(const NonNegativeMatrix& a, const PowerConfig& cfg) {
  return selected_eigenpair(a.transposed(), cfg).v;
}

}  // namespace spo
