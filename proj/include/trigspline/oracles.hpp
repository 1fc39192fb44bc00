#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "trigspline/errors.hpp"
#include "trigspline/grids.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

/// Settings for the brute-force power integral.
struct QuadratureSpec {
  enum class Rule { trapezoid };

  int points = 16384; // power of two recommended
  Rule rule = Rule::trapezoid;

  void validate() const {
    require(points >= 64, ErrorCode::invalid_argument,
            "quadrature needs at least 64 points");
  }
};

/// (1/pi) int_0^{2pi} |S|^2 dt by the periodic trapezoid rule, which is the
/// plain uniform average here and spectrally accurate for periodic
/// integrands.
inline double numeric_power(const Spline& spline,
                            const QuadratureSpec& quad = {}) {
  quad.validate();
  const std::vector<double> vals = spline.eval_uniform(quad.points);
  double acc = 0.0;
  for (double v : vals) acc += v * v;
  return 2.0 * acc / quad.points;
}

namespace detail {

/// Locate the piece of a uniform periodic partition containing t.
/// Returns the piece index and the local offset x in [0, h).
inline std::pair<int, double> locate_piece(double t, double origin,
                                           int pieces, double h) {
  double u = reduce_angle(t - origin);
  int j = static_cast<int>(u / h);
  if (j >= pieces) j = pieces - 1;
  double x = u - j * h;
  if (x < 0.0) x = 0.0;
  return {j, x};
}

/// Cyclic tridiagonal solve by Sherman-Morrison over the Thomas algorithm.
/// diag/sub/super are the three bands; sub[0] and super[n-1] are the cyclic
/// corner entries.  Requires diagonal dominance (true for the spline
/// systems here).
inline std::vector<double> cyclic_tridiagonal_solve(
    const std::vector<double>& sub, const std::vector<double>& diag,
    const std::vector<double>& super, const std::vector<double>& rhs) {
  const size_t n = diag.size();
  const auto thomas = [&](const std::vector<double>& b,
                          const std::vector<double>& d) {
    std::vector<double> cp(n), dp(n), x(n);
    cp[0] = super[0] / b[0];
    dp[0] = d[0] / b[0];
    for (size_t i = 1; i < n; ++i) {
      const double denom = b[i] - sub[i] * cp[i - 1];
      cp[i] = (i + 1 < n ? super[i] : 0.0) / denom;
      dp[i] = (d[i] - sub[i] * dp[i - 1]) / denom;
    }
    x[n - 1] = dp[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
  };

  const double corner_last_col = super[n - 1]; // row n-1 -> column 0
  const double corner_first_row = sub[0];      // row 0 -> column n-1
  const double gamma = -diag[0];
  std::vector<double> b(diag);
  b[0] -= gamma;
  b[n - 1] -= corner_first_row * corner_last_col / gamma;

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = corner_last_col;

  const std::vector<double> y = thomas(b, rhs);
  const std::vector<double> q = thomas(b, u);
  const double vy = y[0] + corner_first_row / gamma * y[n - 1];
  const double vq = q[0] + corner_first_row / gamma * q[n - 1];
  const double scale = vy / (1.0 + vq);

  std::vector<double> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = y[i] - scale * q[i];
  return x;
}

} // namespace detail

/// Periodic piecewise-linear interpolant of the samples on their own grid.
inline double piecewise_linear_eval(const SampleSet& samples, double t) {
  const Grid& grid = samples.grid();
  const int n = grid.size();
  const double h = grid.spacing();
  const auto [j, x] = detail::locate_piece(t, grid.node(0), n, h);
  const double frac = x / h;
  return samples.value(j) * (1.0 - frac) + samples.value((j + 1) % n) * frac;
}

/// C2 periodic cubic interpolating spline on the sample grid.  Solves the
/// cyclic moment system  M_{i-1} + 4 M_i + M_{i+1} = 6 delta2(f)_i / h^2
/// per call; the system is strictly diagonally dominant, hence nonsingular.
inline double periodic_cubic_eval(const SampleSet& samples, double t) {
  const Grid& grid = samples.grid();
  const int n = grid.size();
  const double h = grid.spacing();

  std::vector<double> sub(static_cast<size_t>(n), 1.0);
  std::vector<double> diag(static_cast<size_t>(n), 4.0);
  std::vector<double> super(static_cast<size_t>(n), 1.0);
  std::vector<double> rhs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double d2 = samples.value((i + 1) % n) - 2.0 * samples.value(i) +
                      samples.value((i + n - 1) % n);
    rhs[static_cast<size_t>(i)] = 6.0 * d2 / (h * h);
  }
  const std::vector<double> mom =
      detail::cyclic_tridiagonal_solve(sub, diag, super, rhs);

  const auto [j, x] = detail::locate_piece(t, grid.node(0), n, h);
  const int j1 = (j + 1) % n;
  const double xr = h - x;
  return (mom[static_cast<size_t>(j)] * xr * xr * xr +
          mom[static_cast<size_t>(j1)] * x * x * x) /
             (6.0 * h) +
         (samples.value(j) / h - mom[static_cast<size_t>(j)] * h / 6.0) * xr +
         (samples.value(j1) / h - mom[static_cast<size_t>(j1)] * h / 6.0) * x;
}

/// C1 periodic quadratic interpolating spline whose breakpoints sit on the
/// opposite grid kind, i.e. midway between the sample nodes.  The unknown
/// breakpoint values z satisfy the cyclic system
///   z_{i-1} + 6 z_i + z_{i+1} = 4 (g_{i-1} + g_i)
/// where g_i is the sample value interior to piece i.
inline double periodic_quadratic_eval(const SampleSet& samples, double t) {
  const Grid& grid = samples.grid();
  const int n = grid.size();
  const double h = grid.spacing();
  const bool samples_on_midpoints = grid.kind() == GridIndex::midpoint;
  // Breakpoints: the other grid kind.  Piece i of the nodal breakpoints
  // holds midpoint node i; piece i of the midpoint breakpoints holds nodal
  // node i+1.
  const double origin =
      samples_on_midpoints ? 0.0 : std::numbers::pi / n;
  const auto piece_value = [&](int i) {
    return samples_on_midpoints ? samples.value(i)
                                : samples.value((i + 1) % n);
  };

  std::vector<double> sub(static_cast<size_t>(n), 1.0);
  std::vector<double> diag(static_cast<size_t>(n), 6.0);
  std::vector<double> super(static_cast<size_t>(n), 1.0);
  std::vector<double> rhs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    rhs[static_cast<size_t>(i)] =
        4.0 * (piece_value((i + n - 1) % n) + piece_value(i));
  const std::vector<double> z =
      detail::cyclic_tridiagonal_solve(sub, diag, super, rhs);

  const auto [j, x] = detail::locate_piece(t, origin, n, h);
  const double u = x / h; // midpoint of the piece at u = 1/2
  return z[static_cast<size_t>(j)] * 2.0 * (u - 0.5) * (u - 1.0) +
         piece_value(j) * 4.0 * u * (1.0 - u) +
         z[static_cast<size_t>((j + 1) % n)] * 2.0 * u * (u - 0.5);
}

/// Brute-force reference: the same spline series summed to alias index
/// m_huge for every harmonic, factors included, with no tail shortcuts.
inline double dense_series_eval(const Spline& spline, double t,
                                std::int64_t m_huge) {
  for (std::int64_t used : spline.alias_terms())
    require(m_huge >= used, ErrorCode::invalid_argument,
            "m_huge must not be below the spline's own truncation");
  const SplineConfig& cfg = spline.config();
  const int n = spline.node_count();
  const int basis_sign = to_int(cfg.crosslink);
  const int factor_sign =
      alias_sign_exponent(cfg.crosslink, cfg.interpolation);

  double acc = 0.5 * spline.coeffs().a0;
  for (int k = 1; k <= spline.harmonics(); ++k) {
    const size_t i = static_cast<size_t>(k - 1);
    detail::AliasTerms terms(spline.factor(), n, k);
    const detail::FactorSums fc =
        detail::factor_partial_sum(terms, cfg.gamma, factor_sign, m_huge);
    const detail::FactorSums fs =
        detail::factor_partial_sum(terms, cfg.eta, factor_sign, m_huge);
    acc += spline.coeffs().a[i] *
           detail::alias_series_at(terms, cfg.gamma, basis_sign, false, k, n,
                                   t, m_huge) /
           fc.value;
    acc += spline.coeffs().b[i] *
           detail::alias_series_at(terms, cfg.eta, basis_sign, true, k, n, t,
                                   m_huge) /
           fs.value;
  }
  return acc;
}

} // namespace trigspline
