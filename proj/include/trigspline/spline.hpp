#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trigspline/errors.hpp"
#include "trigspline/fourier.hpp"
#include "trigspline/grids.hpp"
#include "trigspline/kernels.hpp"

namespace trigspline {

namespace detail {

inline bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

/// Iterative radix-2 transform, X_p = sum_q x_q exp(sign 2 pi i q p / n).
inline void fft_pow2(std::vector<std::complex<double>>& a, double sign) {
  const int n = static_cast<int>(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
  }
  std::vector<std::complex<double>> tw(static_cast<size_t>(n / 2));
  for (int q = 0; q < n / 2; ++q)
    tw[static_cast<size_t>(q)] = std::polar(1.0, sign * two_pi * q / n);
  for (int len = 2; len <= n; len <<= 1) {
    const int step = n / len;
    for (int i = 0; i < n; i += len) {
      for (int j = 0; j < len / 2; ++j) {
        const std::complex<double> w = tw[static_cast<size_t>(j * step)];
        auto& lo = a[static_cast<size_t>(i + j)];
        auto& hi = a[static_cast<size_t>(i + j + len / 2)];
        const std::complex<double> u = lo, v = hi * w;
        lo = u + v;
        hi = u - v;
      }
    }
  }
}

} // namespace detail

/// Everything needed to assemble a spline from samples; the sample grid must
/// match `interpolation`.
struct SplineConfig {
  GridIndex crosslink = GridIndex::nodal;     // I1: alias sign pattern of the basis series
  GridIndex interpolation = GridIndex::nodal; // I2: grid carrying the samples
  ShapeVector gamma{1.0, 1.0, 1.0};           // cosine-series shape vector
  ShapeVector eta{1.0, 1.0, 1.0};             // sine-series shape vector
  ConvergenceFactor factor = ConvergenceFactor::sinc_power(1);
  TruncationPolicy trunc{};

  int smoothness() const { return factor.smoothness(); }
};

/// Closed-form average power (1/pi) int_0^{2pi} |S|^2 dt decomposed per
/// harmonic: total = a0^2/2 + sum_k (a_k^2 pc_k + b_k^2 ps_k).
struct PowerReport {
  double total = 0.0;
  std::vector<double> pc;
  std::vector<double> ps;
};

/// An immutable, evaluable trigonometric interpolation spline.
///
/// The defining series, per harmonic k = 1..(N-1)/2 of the sample
/// polynomial, divides an alias-extended basis series by its t-independent
/// interpolation factor.  Construction truncates each alias sum at m = M_k
/// and, crucially, computes the stored factors from the *same* truncated
/// range.  At the interpolation nodes the truncated series collapses onto the
/// truncated factor identically, so interpolation of the samples is exact
/// (to rounding) for every truncation depth; the truncation level only
/// affects accuracy between nodes, where the recorded tail bound applies.
class Spline {
 public:
  const SplineConfig& config() const { return config_; }
  const TrigCoeffs& coeffs() const { return coeffs_; }
  const ConvergenceFactor& factor() const { return cf_; }
  int node_count() const { return coeffs_.node_count; }
  int harmonics() const { return coeffs_.harmonics(); }
  int smoothness() const { return cf_.smoothness(); }

  /// Interpolation factors actually used as divisors (truncated at M_k).
  const std::vector<double>& factor_cos() const { return hc_; }
  const std::vector<double>& factor_sin() const { return hs_; }
  /// Alias terms per harmonic.
  const std::vector<std::int64_t>& alias_terms() const { return m_cut_; }
  /// Largest per-harmonic bound on the neglected tail (estimate for r = 0).
  double tail_bound() const { return tail_bound_; }
  /// False when any harmonic had to stop at max_m short of tail_tol.
  bool tail_converged() const { return converged_; }

  double eval(double t) const {
    double acc = 0.5 * coeffs_.a0;
    for (int k = 1; k <= harmonics(); ++k) {
      const size_t i = static_cast<size_t>(k - 1);
      detail::AliasTerms terms(cf_, node_count(), k);
      acc += coeffs_.a[i] *
             detail::alias_series_at(terms, config_.gamma, basis_sign_, false,
                                     k, node_count(), t, m_cut_[i]) /
             hc_[i];
      acc += coeffs_.b[i] *
             detail::alias_series_at(terms, config_.eta, basis_sign_, true, k,
                                     node_count(), t, m_cut_[i]) /
             hs_[i];
    }
    return acc;
  }

  /// Element-wise eval; same code path point by point.
  std::vector<double> eval_batch(std::span<const double> ts) const {
    std::vector<double> out;
    out.reserve(ts.size());
    for (double t : ts) out.push_back(eval(t));
    return out;
  }

  /// Values at `points` uniform angles 2 pi p / points.  Sums exactly the
  /// same truncated series as eval(), but folds every harmonic j into bin
  /// j mod points first, which makes dense sweeps O(total terms) instead of
  /// O(points x total terms).
  std::vector<double> eval_uniform(int points) const {
    require(points >= 0, ErrorCode::invalid_argument,
            "point count must be >= 0");
    if (points == 0) return {};
    std::vector<double> fa(static_cast<size_t>(points), 0.0);
    std::vector<double> fb(static_cast<size_t>(points), 0.0);
    const int n_nodes = node_count();
    for (int k = 1; k <= harmonics(); ++k) {
      const size_t i = static_cast<size_t>(k - 1);
      detail::AliasTerms terms(cf_, n_nodes, k);
      const double wc = coeffs_.a[i] / hc_[i];
      const double ws = coeffs_.b[i] / hs_[i];
      const double vk = terms.principal();
      fa[static_cast<size_t>(k % points)] += wc * config_.gamma.principal * vk;
      fb[static_cast<size_t>(k % points)] += ws * config_.eta.principal * vk;
      for (std::int64_t m = 1; m <= m_cut_[i]; ++m) {
        const double sgn = (basis_sign_ && (m & 1)) ? -1.0 : 1.0;
        const double up = terms.upper(m);
        const double lo = terms.lower(m);
        const size_t bin_up =
            static_cast<size_t>((m * n_nodes + k) % points);
        const size_t bin_lo =
            static_cast<size_t>((m * n_nodes - k) % points);
        fa[bin_up] += sgn * wc * config_.gamma.upper * up;
        fa[bin_lo] += sgn * wc * config_.gamma.lower * lo;
        fb[bin_up] += sgn * ws * config_.eta.upper * up;
        fb[bin_lo] -= sgn * ws * config_.eta.lower * lo;
      }
    }
    return synthesize_uniform(fa, fb, points);
  }

  /// Term-wise derivative of the given order (>= 1).  Continuity is
  /// guaranteed for order <= r-1.  Differentiation weakens the decay to
  /// O(j^(order-1-r)); once order >= r no tail bound exists and the call
  /// fails unless the series is alias-free.
  double derivative(double t, int order) const {
    require(order >= 1, ErrorCode::invalid_argument,
            "derivative order must be >= 1");
    const int r_eff = cf_.smoothness() - order;
    double acc = 0.0;
    for (int k = 1; k <= harmonics(); ++k) {
      const size_t i = static_cast<size_t>(k - 1);
      detail::AliasTerms terms(cf_, node_count(), k);
      acc += coeffs_.a[i] *
             derivative_series(terms, config_.gamma, false, k, t, order,
                               r_eff) /
             hc_[i];
      acc += coeffs_.b[i] *
             derivative_series(terms, config_.eta, true, k, t, order, r_eff) /
             hs_[i];
    }
    return acc;
  }

  /// True when the order-th derivative is covered by the smoothness budget.
  bool derivative_is_smooth(int order) const {
    return order <= cf_.smoothness() - 1;
  }

  /// Per-harmonic Parseval components over the truncated series.  The alias
  /// squares all enter with positive sign; dividing by the stored truncated
  /// factors keeps the report consistent with what eval() integrates to.
  PowerReport power() const {
    require(cf_.smoothness() >= 1, ErrorCode::requires_smoothness,
            "average power in closed form needs smoothness >= 1");
    PowerReport report;
    report.pc.resize(static_cast<size_t>(harmonics()));
    report.ps.resize(static_cast<size_t>(harmonics()));
    double total = 0.5 * coeffs_.a0 * coeffs_.a0;
    for (int k = 1; k <= harmonics(); ++k) {
      const size_t i = static_cast<size_t>(k - 1);
      detail::AliasTerms terms(cf_, node_count(), k);
      const double vk = terms.principal();
      double num_c = detail::ipow(config_.gamma.principal * vk, 2);
      double num_s = detail::ipow(config_.eta.principal * vk, 2);
      for (std::int64_t m = 1; m <= m_cut_[i]; ++m) {
        const double up = terms.upper(m);
        const double lo = terms.lower(m);
        num_c += detail::ipow(config_.gamma.upper * up, 2) +
                 detail::ipow(config_.gamma.lower * lo, 2);
        num_s += detail::ipow(config_.eta.upper * up, 2) +
                 detail::ipow(config_.eta.lower * lo, 2);
      }
      report.pc[i] = num_c / (hc_[i] * hc_[i]);
      report.ps[i] = num_s / (hs_[i] * hs_[i]);
      total += coeffs_.a[i] * coeffs_.a[i] * report.pc[i] +
               coeffs_.b[i] * coeffs_.b[i] * report.ps[i];
    }
    report.total = total;
    return report;
  }

  friend Spline build_spline(const SampleSet& samples,
                             const SplineConfig& config);

 private:
  Spline() = default;

  double derivative_series(const detail::AliasTerms& terms,
                           const ShapeVector& w, bool sine, int k, double t,
                           int order, int r_eff) const {
    std::int64_t m_cut = 0;
    if (w.upper == 0.0 && w.lower == 0.0) {
      m_cut = 0; // alias-free: the series is finite, any order is exact
    } else if (r_eff < 1) {
      fail(ErrorCode::tail_not_converged,
           "derivative order " + std::to_string(order) +
               " leaves no convergent tail bound at smoothness " +
               std::to_string(cf_.smoothness()));
    } else {
      m_cut = detail::alias_count_for_tol(cf_, node_count(), k,
                                          w.alias_weight(),
                                          config_.trunc.tail_tol, order);
      if (m_cut == detail::unbounded_m || m_cut > config_.trunc.max_m)
        m_cut = config_.trunc.max_m;
    }
    return detail::alias_series_at(terms, w, basis_sign_, sine, k,
                                   node_count(), t, m_cut, order);
  }

  std::vector<double> synthesize_uniform(const std::vector<double>& fa,
                                         const std::vector<double>& fb,
                                         int points) const {
    std::vector<double> out(static_cast<size_t>(points));
    const double half_a0 = 0.5 * coeffs_.a0;
    if (detail::is_pow2(points) && points >= 4) {
      std::vector<std::complex<double>> g(static_cast<size_t>(points));
      for (int q = 0; q < points; ++q)
        g[static_cast<size_t>(q)] = {fa[static_cast<size_t>(q)],
                                     -fb[static_cast<size_t>(q)]};
      detail::fft_pow2(g, +1.0);
      for (int p = 0; p < points; ++p)
        out[static_cast<size_t>(p)] = half_a0 + g[static_cast<size_t>(p)].real();
      return out;
    }
    for (int p = 0; p < points; ++p) {
      const double theta = two_pi * p / points;
      const double cstep = std::cos(theta), sstep = std::sin(theta);
      double c = 1.0, s = 0.0; // cos/sin of q theta
      double acc = half_a0;
      for (int q = 0; q < points; ++q) {
        acc += fa[static_cast<size_t>(q)] * c + fb[static_cast<size_t>(q)] * s;
        const double cn = c * cstep - s * sstep;
        s = s * cstep + c * sstep;
        c = cn;
      }
      out[static_cast<size_t>(p)] = acc;
    }
    return out;
  }

  SplineConfig config_;
  TrigCoeffs coeffs_;
  ConvergenceFactor cf_ = ConvergenceFactor::sinc_power(1);
  int basis_sign_ = 0;  // exponent of (-1)^m in the basis series (= I1)
  int factor_sign_ = 0; // exponent in the factors (= I1 xor I2)
  std::vector<double> hc_;
  std::vector<double> hs_;
  std::vector<std::int64_t> m_cut_;
  double tail_bound_ = 0.0;
  bool converged_ = true;
};

/// Assembles the spline: sample coefficients, per-harmonic truncation depth
/// from the tail bound (capped at max_m), and the consistently truncated
/// interpolation factors.  Fails on grid mismatch or a vanishing factor.
inline Spline build_spline(const SampleSet& samples,
                           const SplineConfig& config) {
  require(samples.grid().kind() == config.interpolation,
          ErrorCode::grid_mismatch,
          "samples live on grid " + std::to_string(to_int(samples.grid().kind())) +
              " but the configured interpolation grid is " +
              std::to_string(to_int(config.interpolation)));
  config.trunc.validate();

  Spline sp;
  sp.config_ = config;
  sp.coeffs_ = dft_coefficients(samples);
  sp.cf_ = config.factor.resolve(samples.grid().size());
  sp.basis_sign_ = to_int(config.crosslink);
  sp.factor_sign_ = alias_sign_exponent(config.crosslink, config.interpolation);

  const int n_nodes = samples.grid().size();
  const int n_harm = samples.grid().harmonics();
  sp.hc_.resize(static_cast<size_t>(n_harm));
  sp.hs_.resize(static_cast<size_t>(n_harm));
  sp.m_cut_.resize(static_cast<size_t>(n_harm));
  sp.tail_bound_ = 0.0;
  sp.converged_ = true;

  const double weight = std::max(config.gamma.alias_weight(),
                                 config.eta.alias_weight());
  // The canonical sinc factor at alpha = 2pi/N may stop at max_m short of
  // tail_tol: the consistently truncated factors keep node interpolation
  // exact regardless, and the achieved tail is recorded.  Other factors
  // follow the strict contract and refuse an unreachable tolerance.
  const bool benign_cap =
      sp.cf_.default_alpha(n_nodes) || sp.cf_.smoothness() == 0;
  for (int k = 1; k <= n_harm; ++k) {
    const size_t i = static_cast<size_t>(k - 1);
    std::int64_t m_cut = detail::alias_count_for_tol(
        sp.cf_, n_nodes, k, weight, config.trunc.tail_tol);
    detail::AliasTerms terms(sp.cf_, n_nodes, k);
    double tail;
    if (m_cut == detail::unbounded_m || m_cut > config.trunc.max_m) {
      if (!benign_cap)
        fail(ErrorCode::tail_not_converged,
             "alias tail bound needs m > " + std::to_string(config.trunc.max_m) +
                 " to reach tail_tol at harmonic " + std::to_string(k));
      m_cut = config.trunc.max_m;
      sp.converged_ = false;
      tail = detail::alias_tail_bound(sp.cf_, n_nodes, k, m_cut, weight);
      if (!std::isfinite(tail)) { // r = 0: report the first omitted terms
        tail = detail::first_omitted_estimate(terms, config.gamma, m_cut) +
               detail::first_omitted_estimate(terms, config.eta, m_cut);
      }
    } else {
      tail = detail::alias_tail_bound(sp.cf_, n_nodes, k, m_cut, weight);
    }
    sp.m_cut_[i] = m_cut;
    sp.tail_bound_ = std::max(sp.tail_bound_, tail);

    const detail::FactorSums fc = detail::factor_partial_sum(
        terms, config.gamma, sp.factor_sign_, m_cut);
    detail::check_not_singular(fc, k);
    const detail::FactorSums fs = detail::factor_partial_sum(
        terms, config.eta, sp.factor_sign_, m_cut);
    detail::check_not_singular(fs, k);
    sp.hc_[i] = fc.value;
    sp.hs_[i] = fs.value;
  }
  return sp;
}

} // namespace trigspline
