#pragma once

#include <cmath>
#include <vector>

#include "trigspline/grids.hpp"

namespace trigspline {

/// Coefficients of the trigonometric polynomial interpolating a SampleSet on
/// its grid:
///
///   T(t) = a0/2 + sum_{k=1}^{(N-1)/2} (a_k cos kt + b_k sin kt).
///
/// All three coefficient families carry the same 2/N normalization; with the
/// a0/2 leading term this is exactly what makes T reproduce the samples at
/// the grid nodes (discrete orthogonality of the harmonics on either uniform
/// grid kind).
struct TrigCoeffs {
  int node_count = 0; // N, odd
  GridIndex grid_kind = GridIndex::nodal;
  double a0 = 0.0;
  std::vector<double> a; // k = 1..(N-1)/2
  std::vector<double> b;

  int harmonics() const { return (node_count - 1) / 2; }
};

/// Direct O(N^2) summation; N stays desk-sized here, so no transform-based
/// path is needed.
inline TrigCoeffs dft_coefficients(const SampleSet& samples) {
  const Grid& grid = samples.grid();
  const int n_nodes = grid.size();
  const int n_harm = grid.harmonics();
  const double scale = 2.0 / n_nodes;

  TrigCoeffs out;
  out.node_count = n_nodes;
  out.grid_kind = grid.kind();
  out.a.resize(static_cast<size_t>(n_harm));
  out.b.resize(static_cast<size_t>(n_harm));

  double sum = 0.0;
  for (int j = 0; j < n_nodes; ++j) sum += samples.value(j);
  out.a0 = scale * sum;

  for (int k = 1; k <= n_harm; ++k) {
    double ak = 0.0, bk = 0.0;
    for (int j = 0; j < n_nodes; ++j) {
      const double arg = k * grid.node(j);
      ak += samples.value(j) * std::cos(arg);
      bk += samples.value(j) * std::sin(arg);
    }
    out.a[static_cast<size_t>(k - 1)] = scale * ak;
    out.b[static_cast<size_t>(k - 1)] = scale * bk;
  }
  return out;
}

inline double eval_trig_polynomial(const TrigCoeffs& coeffs, double t) {
  double acc = 0.5 * coeffs.a0;
  for (int k = 1; k <= coeffs.harmonics(); ++k) {
    acc += coeffs.a[static_cast<size_t>(k - 1)] * std::cos(k * t) +
           coeffs.b[static_cast<size_t>(k - 1)] * std::sin(k * t);
  }
  return acc;
}

} // namespace trigspline
