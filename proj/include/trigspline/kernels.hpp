#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "trigspline/errors.hpp"
#include "trigspline/grids.hpp"

namespace trigspline {

/// Weights for the three branches of an alias series: the principal harmonic
/// k and the two alias branches mN+k, mN-k.
struct ShapeVector {
  double principal = 1.0; // weight of the k term
  double upper = 1.0;     // weight of the mN+k branch
  double lower = 1.0;     // weight of the mN-k branch

  ShapeVector() = default;
  ShapeVector(double p, double u, double l) : principal(p), upper(u), lower(l) {
    require(std::isfinite(p) && std::isfinite(u) && std::isfinite(l),
            ErrorCode::invalid_argument, "shape components must be finite");
    require(p != 0.0 || u != 0.0 || l != 0.0, ErrorCode::zero_shape_vector,
            "shape vector must have a nonzero component");
  }

  double alias_weight() const { return std::abs(upper) + std::abs(lower); }
};

/// Cap and target accuracy for the infinite alias sums.  max_m bounds the
/// alias index m; tail_tol is the bound the neglected tail must satisfy.
struct TruncationPolicy {
  std::int64_t max_m = 1'000'000;
  double tail_tol = 1e-10;

  void validate() const {
    require(max_m >= 1, ErrorCode::invalid_argument, "max_m must be >= 1");
    require(std::isfinite(tail_tol) && tail_tol > 0.0,
            ErrorCode::invalid_argument, "tail_tol must be positive");
  }
};

/// What a truncated summation actually achieved.
struct TailInfo {
  std::int64_t terms = 0;  // alias terms summed (index m ran 1..terms)
  double tail = 0.0;       // bound on the neglected tail (estimate for r = 0)
  bool converged = true;   // tail <= tail_tol held for the requested policy
};

namespace detail {

inline double ipow(double x, int e) {
  double acc = 1.0, base = x;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

/// sin(x)/x, safe near zero.
inline double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

/// Reduce to [0, 2pi) without perturbing arguments already in range.
inline double reduce_angle(double t) {
  const double turns = std::floor(t / two_pi);
  double u = t - turns * two_pi;
  if (u >= two_pi) u -= two_pi;
  if (u < 0.0) u += two_pi;
  return u;
}

/// Hurwitz zeta  sum_{i>=0} (i+a)^-s  by Euler-Maclaurin; accurate to
/// ~1e-18 relative for s in [2, 60], a in (0, 2].
inline double hurwitz_zeta(double s, double a) {
  constexpr int head = 32;
  // B_{2i}/(2i)! for i = 1..6
  constexpr double bern[] = {1.0 / 12.0,
                             -1.0 / 720.0,
                             1.0 / 30240.0,
                             -1.0 / 1209600.0,
                             1.0 / 47900160.0,
                             -691.0 / 1307674368000.0};
  double acc = 0.0;
  for (int i = 0; i < head; ++i) acc += std::pow(i + a, -s);
  const double x = head + a;
  const double inv_x = 1.0 / x;
  const double xms = std::pow(x, -s);
  acc += x * xms / (s - 1.0); // integral term x^{1-s}/(s-1)
  acc += 0.5 * xms;
  double poch = s;            // s (s+1) ... (s+2i-2)
  double xpow = xms * inv_x;  // x^{-s-2i+1}
  for (int i = 0; i < 6; ++i) {
    acc += bern[i] * poch * xpow;
    poch *= (s + 2 * i + 1) * (s + 2 * i + 2);
    xpow *= inv_x * inv_x;
  }
  return acc;
}

} // namespace detail

/// Multipliers v_j forcing a chosen decay order O(j^-(1+r)) on the series
/// harmonics; r is the smoothness parameter.  Either a power of the cardinal
/// sine, v_j = [sin(alpha j/2) / (alpha j/2)]^(1+r), or a user-supplied rule
/// with a declared decay scale C such that |v_j| <= C j^-(1+r).
class ConvergenceFactor {
 public:
  enum class Kind { sinc_power, custom };

  /// Sinc power with alpha resolved later from the node count (2pi/N).
  static ConvergenceFactor sinc_power(int smoothness) {
    return sinc_power(smoothness, 0.0);
  }

  static ConvergenceFactor sinc_power(int smoothness, double alpha) {
    require(smoothness >= 0, ErrorCode::invalid_argument, "smoothness must be >= 0");
    require(alpha >= 0.0 && std::isfinite(alpha), ErrorCode::invalid_argument,
            "alpha must be positive (or 0 meaning 2pi/N)");
    ConvergenceFactor cf;
    cf.kind_ = Kind::sinc_power;
    cf.smoothness_ = smoothness;
    cf.alpha_ = alpha;
    return cf;
  }

  static ConvergenceFactor custom(int smoothness,
                                  std::function<double(std::int64_t)> rule,
                                  double decay_scale) {
    require(smoothness >= 0, ErrorCode::invalid_argument, "smoothness must be >= 0");
    require(static_cast<bool>(rule), ErrorCode::invalid_argument,
            "custom rule must be callable");
    require(decay_scale > 0.0 && std::isfinite(decay_scale),
            ErrorCode::invalid_argument, "decay scale must be positive");
    ConvergenceFactor cf;
    cf.kind_ = Kind::custom;
    cf.smoothness_ = smoothness;
    cf.rule_ = std::move(rule);
    cf.decay_scale_ = decay_scale;
    return cf;
  }

  Kind kind() const { return kind_; }
  int smoothness() const { return smoothness_; }
  bool resolved() const { return kind_ == Kind::custom || alpha_ > 0.0; }

  /// Bind the default alpha = 2pi/N when none was given.
  ConvergenceFactor resolve(int node_count) const {
    ConvergenceFactor cf = *this;
    if (cf.kind_ == Kind::sinc_power && cf.alpha_ == 0.0)
      cf.alpha_ = two_pi / node_count;
    return cf;
  }

  double alpha() const { return alpha_; }

  /// True when the sinc argument steps by exactly pi between aliases, which
  /// unlocks the closed-form factor sums.
  bool default_alpha(int node_count) const {
    return kind_ == Kind::sinc_power &&
           std::abs(alpha_ * node_count - two_pi) <= 1e-12 * two_pi;
  }

  /// C with |v_j| <= C j^-(1+r).
  double decay_scale() const {
    if (kind_ == Kind::custom) return decay_scale_;
    return detail::ipow(2.0 / alpha_, smoothness_ + 1);
  }

  double operator()(std::int64_t j) const {
    if (kind_ == Kind::custom) return rule_(j);
    const double x = 0.5 * alpha_ * static_cast<double>(j);
    return detail::ipow(detail::sinc(x), smoothness_ + 1);
  }

 private:
  ConvergenceFactor() = default;

  Kind kind_ = Kind::sinc_power;
  int smoothness_ = 1;
  double alpha_ = 0.0;
  std::function<double(std::int64_t)> rule_;
  double decay_scale_ = 0.0;
};

inline double convergence_factor(const ConvergenceFactor& cf, std::int64_t k) {
  require(k >= 1, ErrorCode::invalid_argument, "harmonic index must be >= 1");
  require(cf.resolved(), ErrorCode::invalid_argument,
          "convergence factor has unresolved alpha");
  return cf(k);
}

/// Exponent e of the per-m sign (-1)^(m e) in the interpolation factors.
/// The paper-style exponent I1 - 2 I1 I2 + I2 equals I1 xor I2 on {0,1}.
inline int alias_sign_exponent(GridIndex i1, GridIndex i2) {
  return to_int(i1) ^ to_int(i2);
}

namespace detail {

inline constexpr std::int64_t unbounded_m =
    std::numeric_limits<std::int64_t>::max();

/// Streams v_k, v_{mN+k}, v_{mN-k} for one harmonic.  For the sinc factor at
/// alpha = 2pi/N the sine is periodic across aliases, so each term costs one
/// division and a small integer power instead of a libm sin call.
class AliasTerms {
 public:
  AliasTerms(const ConvergenceFactor& cf, int node_count, int k)
      : cf_(&cf), n_(node_count), k_(k), s_(cf.smoothness() + 1) {
    fast_ = cf.default_alpha(node_count);
    if (fast_) {
      sin_k_ = std::sin(std::numbers::pi * k / node_count);
      n_over_pi_ = node_count / std::numbers::pi;
    }
  }

  double principal() const { return (*cf_)(k_); }

  double upper(std::int64_t m) const {
    const std::int64_t j = m * n_ + k_;
    if (!fast_) return (*cf_)(j);
    const double sgn_sin = (m & 1) ? -sin_k_ : sin_k_;
    return ipow(sgn_sin * n_over_pi_ / static_cast<double>(j), s_);
  }

  double lower(std::int64_t m) const {
    const std::int64_t j = m * n_ - k_;
    if (!fast_) return (*cf_)(j);
    const double sgn_sin = (m & 1) ? sin_k_ : -sin_k_;
    return ipow(sgn_sin * n_over_pi_ / static_cast<double>(j), s_);
  }

 private:
  const ConvergenceFactor* cf_;
  int n_, k_, s_;
  bool fast_ = false;
  double sin_k_ = 0.0, n_over_pi_ = 0.0;
};

/// Bound on sum_{m>M} (mN-k)^-p via the integral of the monotone summand;
/// requires p > 1.
inline double tail_power_sum_bound(int node_count, int k, std::int64_t m_cut,
                                   double p) {
  const double edge = static_cast<double>(m_cut) * node_count - k;
  return std::pow(edge, 1.0 - p) / ((p - 1.0) * node_count);
}

/// Bound on the neglected alias tail of a weighted series, after optional
/// term-wise differentiation of the given order:
///   weight * C * sum_{m>M} (mN-k)^(order-1-r)  <=  tail_power_sum_bound.
/// +inf when the decay exponent cannot bound the tail (r - order < 1).
inline double alias_tail_bound(const ConvergenceFactor& cf, int node_count,
                               int k, std::int64_t m_cut, double weight,
                               int deriv_order = 0) {
  const int r_eff = cf.smoothness() - deriv_order;
  if (r_eff < 1) return std::numeric_limits<double>::infinity();
  if (weight == 0.0) return 0.0;
  const double p = 1.0 + r_eff;
  return weight * cf.decay_scale() *
         tail_power_sum_bound(node_count, k, m_cut, p);
}

/// Smallest alias count M whose tail bound meets tol, or unbounded_m when no
/// finite M can (r - order < 1).  Weight is the summed magnitude of the two
/// alias-branch coefficients.
inline std::int64_t alias_count_for_tol(const ConvergenceFactor& cf,
                                        int node_count, int k, double weight,
                                        double tol, int deriv_order = 0) {
  if (weight == 0.0) return 1;
  const int r_eff = cf.smoothness() - deriv_order;
  if (r_eff < 1) return unbounded_m;
  const double need =
      weight * cf.decay_scale() / (r_eff * node_count * tol);
  const double edge = std::pow(need, 1.0 / r_eff); // require mN - k >= edge
  if (!std::isfinite(edge) || edge > 9.0e18) return unbounded_m;
  std::int64_t m_cut = static_cast<std::int64_t>(
      std::ceil((edge + k) / node_count));
  if (m_cut < 1) m_cut = 1;
  while (alias_tail_bound(cf, node_count, k, m_cut, weight, deriv_order) >
         tol)
    ++m_cut; // absorb rounding of the inversion
  return m_cut;
}

/// First-omitted-term magnitude, reported as the tail estimate when no
/// rigorous bound exists (r = 0).
inline double first_omitted_estimate(const AliasTerms& terms,
                                     const ShapeVector& w, std::int64_t m_cut) {
  return std::abs(w.upper * terms.upper(m_cut + 1)) +
         std::abs(w.lower * terms.lower(m_cut + 1));
}

struct FactorSums {
  double value = 0.0;     // the interpolation factor itself
  double abs_scale = 0.0; // same series with every term in absolute value
};

/// Direct truncated factor sum
///   w1 v_k + sum_{m=1}^{M} (-1)^(m e) [w2 v_{mN+k} + w3 v_{mN-k}].
inline FactorSums factor_partial_sum(const AliasTerms& terms,
                                     const ShapeVector& w, int sign_exp,
                                     std::int64_t m_cut) {
  const double vk = terms.principal();
  FactorSums out;
  out.value = w.principal * vk;
  out.abs_scale = std::abs(out.value);
  for (std::int64_t m = 1; m <= m_cut; ++m) {
    const double up = w.upper * terms.upper(m);
    const double lo = w.lower * terms.lower(m);
    const double sgn = (sign_exp && (m & 1)) ? -1.0 : 1.0;
    out.value += sgn * (up + lo);
    out.abs_scale += std::abs(up) + std::abs(lo);
  }
  return out;
}

/// Closed-form factor for the sinc power at alpha = 2pi/N and r >= 1.  With
/// s = 1+r, the alias sines collapse to +-sin(pi k/N), so both branches are
/// pure power sums expressible through the Hurwitz zeta function:
///   sum_{m>=1} (mN +- k)^-s        = N^-s zeta(s, 1 +- k/N)
///   sum_{m>=1} (-1)^m (mN +- k)^-s = (2N)^-s [zeta(s, 1 +- k/(2N))
///                                             - zeta(s, (1 +- k/N)/2)].
inline FactorSums factor_closed_form(const ConvergenceFactor& cf,
                                     int node_count, int k,
                                     const ShapeVector& w, int sign_exp) {
  const int s = cf.smoothness() + 1;
  const double q = static_cast<double>(k) / node_count;
  const double sin_k = std::sin(std::numbers::pi * q);
  const double ck = ipow(sin_k * node_count / std::numbers::pi, s);
  const double n_pow = ipow(1.0 / node_count, s);
  const double tau = (s & 1) ? -1.0 : 1.0; // (-1)^s
  const double sigma = sign_exp ? -1.0 : 1.0;
  const bool plus_signs = sigma * tau > 0.0; // sign pattern rho = sigma tau

  const auto branch_sum = [&](double q_signed) {
    if (plus_signs) return n_pow * hurwitz_zeta(s, 1.0 + q_signed);
    return n_pow * ipow(0.5, s) *
           (hurwitz_zeta(s, 1.0 + 0.5 * q_signed) -
            hurwitz_zeta(s, 0.5 * (1.0 + q_signed)));
  };

  const double vk = cf(k);
  FactorSums out;
  out.value = w.principal * vk +
              ck * (w.upper * branch_sum(q) + tau * w.lower * branch_sum(-q));
  out.abs_scale = std::abs(w.principal * vk) +
                  std::abs(ck) * (std::abs(w.upper) * n_pow *
                                      hurwitz_zeta(s, 1.0 + q) +
                                  std::abs(w.lower) * n_pow *
                                      hurwitz_zeta(s, 1.0 - q));
  return out;
}

/// One alias series evaluated at angle t, truncated at m_cut:
///   w1 v_k trig(kt)
///     + sum_{m<=M} (-1)^(m e) [w2 v_{mN+k} trig((mN+k)t)
///                              +- w3 v_{mN-k} trig((mN-k)t)]
/// where trig is cos (sine=false, + on the lower branch) or sin (sine=true,
/// - on the lower branch).  deriv_order differentiates term-wise: harmonic j
/// picks up j^order and a quarter-turn phase per order.
inline double alias_series_at(const AliasTerms& terms, const ShapeVector& w,
                              int sign_exp, bool sine, int k, int node_count,
                              double t, std::int64_t m_cut,
                              int deriv_order = 0) {
  const double tr = reduce_angle(t);
  const auto harmonic = [&](double ct, double st, std::int64_t j) {
    // deriv_order-th derivative of cos(jt) resp. sin(jt), without j^order
    double c = ct, s = st;
    switch (deriv_order & 3) {
      case 0: break;
      case 1: { const double tmp = c; c = -s; s = tmp; break; }
      case 2: c = -c; s = -s; break;
      case 3: { const double tmp = c; c = s; s = -tmp; break; }
    }
    const double jp = (deriv_order == 0)
                          ? 1.0
                          : ipow(static_cast<double>(j), deriv_order);
    return jp * (sine ? s : c);
  };

  const double ckt = std::cos(k * tr), skt = std::sin(k * tr);
  double acc = w.principal * terms.principal() * harmonic(ckt, skt, k);

  if (w.upper == 0.0 && w.lower == 0.0) return acc;

  const double cn = std::cos(node_count * tr), sn = std::sin(node_count * tr);
  double cphi = cn, sphi = sn; // cos/sin of m N t
  for (std::int64_t m = 1; m <= m_cut; ++m) {
    if ((m & 4095) == 0) { // reseed the rotation to stop drift
      const double phi = static_cast<double>(m) * node_count * tr;
      cphi = std::cos(phi);
      sphi = std::sin(phi);
    }
    const double sgn = (sign_exp && (m & 1)) ? -1.0 : 1.0;
    // angles (mN +- k) t from the shared rotation
    const double c_up = cphi * ckt - sphi * skt;
    const double s_up = sphi * ckt + cphi * skt;
    const double c_lo = cphi * ckt + sphi * skt;
    const double s_lo = sphi * ckt - cphi * skt;
    const std::int64_t j_up = m * node_count + k;
    const std::int64_t j_lo = m * node_count - k;
    double term = w.upper * terms.upper(m) * harmonic(c_up, s_up, j_up);
    const double lo = w.lower * terms.lower(m) * harmonic(c_lo, s_lo, j_lo);
    term = sine ? term - lo : term + lo;
    acc += sgn * term;
    const double cnext = cphi * cn - sphi * sn;
    sphi = sphi * cn + cphi * sn;
    cphi = cnext;
  }
  return acc;
}

/// Picks the truncation point for a series evaluation under the policy.
/// Throws for r >= 1 when the bound cannot reach tail_tol within max_m;
/// r = 0 has no usable bound and is capped silently (the caller reports).
inline std::int64_t series_cut_or_throw(const ConvergenceFactor& cf,
                                        int node_count, int k, double weight,
                                        const TruncationPolicy& trunc,
                                        TailInfo* info, int deriv_order = 0) {
  const std::int64_t want = alias_count_for_tol(
      cf, node_count, k, weight, trunc.tail_tol, deriv_order);
  const int r_eff = cf.smoothness() - deriv_order;
  if (want == unbounded_m && r_eff >= 1) {
    fail(ErrorCode::tail_not_converged,
         "alias tail bound is not finite at this smoothness/order");
  }
  if (want != unbounded_m && want <= trunc.max_m) {
    if (info) {
      info->terms = want;
      info->tail =
          alias_tail_bound(cf, node_count, k, want, weight, deriv_order);
      info->converged = true;
    }
    return want;
  }
  if (r_eff >= 1) {
    fail(ErrorCode::tail_not_converged,
         "alias tail bound needs m > " +
             std::to_string(trunc.max_m) + " to reach tail_tol");
  }
  if (info) {
    info->terms = trunc.max_m;
    info->tail = std::numeric_limits<double>::quiet_NaN(); // filled by caller
    info->converged = false;
  }
  return trunc.max_m;
}

inline void check_harmonic_range(int k, int node_count) {
  require(node_count >= 3 && node_count % 2 == 1, ErrorCode::invalid_argument,
          "node count must be odd and >= 3");
  require(k >= 1 && k <= (node_count - 1) / 2, ErrorCode::invalid_argument,
          "harmonic index out of range");
}

inline constexpr double singular_rel_eps = 1e-12;

inline void check_not_singular(const FactorSums& f, int k) {
  if (std::abs(f.value) <= singular_rel_eps * f.abs_scale)
    fail(ErrorCode::singular_factor,
         "interpolation factor vanishes at harmonic " + std::to_string(k));
}

} // namespace detail

/// Interpolation factor for the cosine series: the t-independent normalizer
///   w1 v_k + sum_m (-1)^(m (I1 xor I2)) [w2 v_{mN+k} + w3 v_{mN-k}].
/// Uses the closed-form zeta path at the default alpha (r >= 1), otherwise
/// direct summation under the truncation policy.
inline double interp_factor_cos(int k, GridIndex i1, GridIndex i2,
                                const ShapeVector& gamma,
                                const ConvergenceFactor& cf, int node_count,
                                const TruncationPolicy& trunc,
                                TailInfo* info = nullptr) {
  detail::check_harmonic_range(k, node_count);
  trunc.validate();
  const ConvergenceFactor rcf = cf.resolve(node_count);
  const int sign_exp = alias_sign_exponent(i1, i2);

  detail::FactorSums sums;
  if (rcf.default_alpha(node_count) && rcf.smoothness() >= 1) {
    sums = detail::factor_closed_form(rcf, node_count, k, gamma, sign_exp);
    if (info) { info->terms = 0; info->tail = 0.0; info->converged = true; }
  } else {
    TailInfo local;
    const std::int64_t m_cut = detail::series_cut_or_throw(
        rcf, node_count, k, gamma.alias_weight(), trunc, &local);
    detail::AliasTerms terms(rcf, node_count, k);
    sums = detail::factor_partial_sum(terms, gamma, sign_exp, m_cut);
    if (!local.converged)
      local.tail = detail::first_omitted_estimate(terms, gamma, m_cut);
    if (info) *info = local;
  }
  detail::check_not_singular(sums, k);
  return sums.value;
}

/// Interpolation factor for the sine series; same formula with the sine
/// shape vector (both alias branches enter the bracket with plus signs).
inline double interp_factor_sin(int k, GridIndex i1, GridIndex i2,
                                const ShapeVector& eta,
                                const ConvergenceFactor& cf, int node_count,
                                const TruncationPolicy& trunc,
                                TailInfo* info = nullptr) {
  return interp_factor_cos(k, i1, i2, eta, cf, node_count, trunc, info);
}

/// Cosine basis series at angle t, alias signs (-1)^(m I1).
inline double basis_cos(int k, GridIndex i1, const ShapeVector& gamma,
                        const ConvergenceFactor& cf, int node_count, double t,
                        const TruncationPolicy& trunc,
                        TailInfo* info = nullptr) {
  detail::check_harmonic_range(k, node_count);
  trunc.validate();
  const ConvergenceFactor rcf = cf.resolve(node_count);
  TailInfo local;
  const std::int64_t m_cut = detail::series_cut_or_throw(
      rcf, node_count, k, gamma.alias_weight(), trunc, &local);
  detail::AliasTerms terms(rcf, node_count, k);
  const double value = detail::alias_series_at(
      terms, gamma, to_int(i1), /*sine=*/false, k, node_count, t, m_cut);
  if (!local.converged)
    local.tail = detail::first_omitted_estimate(terms, gamma, m_cut);
  if (info) *info = local;
  return value;
}

/// Sine basis series at angle t; the lower alias branch enters negated.
inline double basis_sin(int k, GridIndex i1, const ShapeVector& eta,
                        const ConvergenceFactor& cf, int node_count, double t,
                        const TruncationPolicy& trunc,
                        TailInfo* info = nullptr) {
  detail::check_harmonic_range(k, node_count);
  trunc.validate();
  const ConvergenceFactor rcf = cf.resolve(node_count);
  TailInfo local;
  const std::int64_t m_cut = detail::series_cut_or_throw(
      rcf, node_count, k, eta.alias_weight(), trunc, &local);
  detail::AliasTerms terms(rcf, node_count, k);
  const double value = detail::alias_series_at(
      terms, eta, to_int(i1), /*sine=*/true, k, node_count, t, m_cut);
  if (!local.converged)
    local.tail = detail::first_omitted_estimate(terms, eta, m_cut);
  if (info) *info = local;
  return value;
}

} // namespace trigspline
