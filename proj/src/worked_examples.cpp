// Copyright 2026 The spectral_optim Authors
// SPDX-License-Identifier: Apache-2.0

#include "spectral_optim/worked_examples.hpp"

#include "spectral_optim/perron.hpp"

namespace spo {
namespace {

Eigenpair fixed_pair(const NonNegativeMatrix& a, Vector v, double zero_tol) {
  const double len = norm2(v);
  for (double& x : v) x /= len;
  Eigenpair p;
  p.rho = max_ratio_estimate(a, v, zero_tol);
  p.v = std::move(v);
  return p;
}

}  // namespace

ProductFamily cycling_example_family() {
  ProductFamily f;
  f.d = 3;
  f.sets.push_back(RowSet::finite({{1, 1, 1}, {0, 5, 10}, {0, 10, 5}, {12, 0, 0}}));
  f.sets.push_back(RowSet::finite({{1, 1, 1}, {0, 10, 0}}));
  f.sets.push_back(RowSet::finite({{1, 1, 3}, {0, 0, 10}}));
  return f;
}

NonNegativeMatrix cycling_example_start() {
  return NonNegativeMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 3}});
}

testing::EigenSelector adversarial_selector(PowerConfig power) {
  const auto a2 = NonNegativeMatrix::from_rows({{0, 5, 10}, {0, 10, 0}, {0, 0, 10}});
  const auto a3 = NonNegativeMatrix::from_rows({{0, 10, 5}, {0, 10, 0}, {0, 0, 10}});
  return [=](const NonNegativeMatrix& a, const Eigenpair*) {
    if (a == a2) return fixed_pair(a, {2, 2, 1}, power.zero_tol);
    if (a == a3) return fixed_pair(a, {2, 1, 2}, power.zero_tol);
    return selected_eigenpair(a, power);
  };
}

CyclingDemo run_cycling_demo(const OptimizerConfig& base) {
  const ProductFamily family = cycling_example_family();
  CyclingDemo demo;

  OptimizerConfig greedy = base;
  greedy.direction = Direction::Max;
  greedy.method = Method::Greedy;
  RunOptions from_start;
  from_start.start = cycling_example_start();
  demo.adversarial = testing::optimize_with_selector(family, greedy, from_start,
                                                     adversarial_selector(base.power));

  OptimizerConfig selective = base;
  selective.direction = Direction::Max;
  selective.method = Method::SelectiveGreedy;
  demo.selective = optimize(family, selective);
  return demo;
}

}  // namespace spo
