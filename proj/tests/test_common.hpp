#pragma once

// Shared fixtures for the test suites: the 9-point demo data set used
// throughout, and small builders for configs and samples.

#include <random>
#include <vector>

#include "trigspline/trigspline.hpp"

namespace tst {

inline const std::vector<double>& demo_data() {
  static const std::vector<double> data{3, 1, 3, 2, 4, 1, 3, 1, 2};
  return data;
}

inline trigspline::SampleSet demo_samples(int grid_kind) {
  return trigspline::sample_values(
      trigspline::make_grid(trigspline::grid_index_from_int(grid_kind), 9),
      demo_data());
}

inline trigspline::ShapeVector unit_shape() { return {1.0, 1.0, 1.0}; }
// The non-unit demo vectors exercised across the suites.
inline trigspline::ShapeVector demo_gamma() { return {-0.5, 1.5, -0.7}; }
inline trigspline::ShapeVector demo_eta() { return {0.3, -0.7, -1.5}; }

inline trigspline::SplineConfig make_config(
    int i1, int i2, int r, const trigspline::ShapeVector& gamma,
    const trigspline::ShapeVector& eta, long long max_m = 1'000'000,
    double tail_tol = 1e-10) {
  trigspline::SplineConfig cfg;
  cfg.crosslink = trigspline::grid_index_from_int(i1);
  cfg.interpolation = trigspline::grid_index_from_int(i2);
  cfg.gamma = gamma;
  cfg.eta = eta;
  cfg.factor = trigspline::ConvergenceFactor::sinc_power(r);
  cfg.trunc.max_m = max_m;
  cfg.trunc.tail_tol = tail_tol;
  return cfg;
}

inline std::vector<double> random_values(int n, unsigned seed,
                                         double lo = -5.0, double hi = 5.0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(static_cast<size_t>(n));
  for (double& x : v) x = dist(rng);
  return v;
}

} // namespace tst
