#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "test_common.hpp"
#include "trigspline/trigspline.hpp"

using namespace trigspline;

TEST_CASE("piecewise linear oracle basics", "[oracles]") {
  const SampleSet s = tst::demo_samples(0);
  for (int j = 0; j < 9; ++j)
    CHECK(piecewise_linear_eval(s, s.grid().node(j)) ==
          Catch::Approx(s.value(j)).margin(1e-14));
  // midway between the first two nodes (values 3 and 1): the mean
  const double mid = (s.grid().node(0) + s.grid().node(1)) / 2;
  CHECK(piecewise_linear_eval(s, mid) == Catch::Approx(2.0).margin(1e-13));
  // periodic wrap
  CHECK(piecewise_linear_eval(s, 0.25 - two_pi) ==
        Catch::Approx(piecewise_linear_eval(s, 0.25)).margin(1e-12));

  const SampleSet c = sample_values(make_grid(GridIndex::midpoint, 5),
                                    std::vector<double>(5, 4.25));
  for (double t : {0.0, 1.1, 6.0})
    CHECK(piecewise_linear_eval(c, t) == Catch::Approx(4.25).margin(1e-14));
}

TEST_CASE("periodic cubic oracle interpolates and is C2", "[oracles]") {
  const SampleSet s = tst::demo_samples(0);
  for (int j = 0; j < 9; ++j)
    CHECK(periodic_cubic_eval(s, s.grid().node(j)) ==
          Catch::Approx(s.value(j)).margin(1e-12));

  // two-sided finite differences across every knot
  const double eps = 1e-6;
  for (int j = 0; j < 9; ++j) {
    const double t = s.grid().node(j);
    const auto fd1 = [&](double side) {
      return (periodic_cubic_eval(s, t + side * 2 * eps) -
              periodic_cubic_eval(s, t + side * eps)) /
             eps * (side > 0 ? 1.0 : -1.0);
    };
    CHECK(std::abs(fd1(+1.0) - fd1(-1.0)) <= 1e-4); // first derivative
    const auto fd2 = [&](double side) {
      return (periodic_cubic_eval(s, t + side * 3 * eps) -
              2 * periodic_cubic_eval(s, t + side * 2 * eps) +
              periodic_cubic_eval(s, t + side * eps)) /
             (eps * eps);
    };
    CHECK(std::abs(fd2(+1.0) - fd2(-1.0)) <= 1e-2); // second derivative
  }

  // periodicity
  CHECK(periodic_cubic_eval(s, 1.3) ==
        Catch::Approx(periodic_cubic_eval(s, 1.3 + two_pi)).margin(1e-12));
}

TEST_CASE("cubic and linear oracles agree on constant data", "[oracles]") {
  const SampleSet c = sample_values(make_grid(GridIndex::nodal, 7),
                                    std::vector<double>(7, -0.5));
  for (double t : {0.0, 0.9, 3.3, 6.2}) {
    CHECK(periodic_cubic_eval(c, t) == Catch::Approx(-0.5).margin(1e-13));
    CHECK(periodic_cubic_eval(c, t) ==
          Catch::Approx(piecewise_linear_eval(c, t)).margin(1e-13));
  }
  // second derivative of the constant spline vanishes
  const double eps = 1e-4;
  const double fd2 = (periodic_cubic_eval(c, 1.0 + eps) -
                      2 * periodic_cubic_eval(c, 1.0) +
                      periodic_cubic_eval(c, 1.0 - eps)) /
                     (eps * eps);
  CHECK(std::abs(fd2) <= 1e-6);
}

TEST_CASE("cyclic tridiagonal solver against dense elimination", "[oracles]") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n : {3, 7, 24}) {
    std::vector<double> sub(static_cast<size_t>(n)), diag(static_cast<size_t>(n)),
        super(static_cast<size_t>(n)), rhs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      sub[static_cast<size_t>(i)] = dist(rng);
      super[static_cast<size_t>(i)] = dist(rng);
      diag[static_cast<size_t>(i)] = 5.0 + dist(rng); // diagonally dominant
      rhs[static_cast<size_t>(i)] = dist(rng);
    }
    const std::vector<double> x =
        detail::cyclic_tridiagonal_solve(sub, diag, super, rhs);

    // dense Gaussian elimination as the reference
    std::vector<std::vector<double>> a(
        static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n + 1)));
    for (int i = 0; i < n; ++i) {
      a[static_cast<size_t>(i)][static_cast<size_t>(i)] = diag[static_cast<size_t>(i)];
      a[static_cast<size_t>(i)][static_cast<size_t>((i + n - 1) % n)] +=
          sub[static_cast<size_t>(i)];
      a[static_cast<size_t>(i)][static_cast<size_t>((i + 1) % n)] +=
          super[static_cast<size_t>(i)];
      a[static_cast<size_t>(i)][static_cast<size_t>(n)] = rhs[static_cast<size_t>(i)];
    }
    for (int col = 0; col < n; ++col) {
      int pivot = col;
      for (int row = col + 1; row < n; ++row)
        if (std::abs(a[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
            std::abs(a[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
          pivot = row;
      std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
      for (int row = 0; row < n; ++row) {
        if (row == col) continue;
        const double f = a[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                         a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int c2 = col; c2 <= n; ++c2)
          a[static_cast<size_t>(row)][static_cast<size_t>(c2)] -=
              f * a[static_cast<size_t>(col)][static_cast<size_t>(c2)];
      }
    }
    for (int i = 0; i < n; ++i)
      CHECK(x[static_cast<size_t>(i)] ==
            Catch::Approx(a[static_cast<size_t>(i)][static_cast<size_t>(n)] /
                          a[static_cast<size_t>(i)][static_cast<size_t>(i)])
                .margin(1e-12));
  }
}

TEST_CASE("numeric power basics", "[oracles]") {
  const double c = 3.0;
  const SampleSet cs = sample_values(make_grid(GridIndex::nodal, 9),
                                     std::vector<double>(9, c));
  const Spline csp = build_spline(
      cs, tst::make_config(0, 0, 2, tst::unit_shape(), tst::unit_shape()));
  CHECK(numeric_power(csp) == Catch::Approx(2 * c * c).margin(1e-12));

  // band-limited case: quadrature is exact and matches the coefficient sum
  const ShapeVector plain(1, 0, 0);
  const Spline poly = build_spline(tst::demo_samples(0),
                                   tst::make_config(0, 0, 2, plain, plain));
  double closed = 0.5 * poly.coeffs().a0 * poly.coeffs().a0;
  for (int k = 1; k <= 4; ++k) {
    const size_t i = static_cast<size_t>(k - 1);
    closed += poly.coeffs().a[i] * poly.coeffs().a[i] +
              poly.coeffs().b[i] * poly.coeffs().b[i];
  }
  CHECK(numeric_power(poly) == Catch::Approx(closed).margin(1e-10));

  QuadratureSpec bad;
  bad.points = 32;
  CHECK_THROWS_AS(numeric_power(poly, bad), Error);
}

TEST_CASE("doubling the quadrature points is self-consistent", "[oracles]") {
  const Spline sp = build_spline(
      tst::demo_samples(0),
      tst::make_config(0, 0, 2, tst::demo_gamma(), tst::demo_eta()));
  QuadratureSpec a, b;
  a.points = 16384;
  b.points = 32768;
  CHECK(std::abs(numeric_power(sp, a) - numeric_power(sp, b)) < 1e-10);
}

TEST_CASE("smoothness-1 spline equals the piecewise linear interpolant",
          "[oracles]") {
  const SampleSet s = tst::demo_samples(0);
  const Spline sp = build_spline(
      s, tst::make_config(0, 0, 1, tst::unit_shape(), tst::unit_shape(),
                          1'000'000));
  const std::vector<double> dense = sp.eval_uniform(1000);
  double dev = 0.0;
  for (int p = 0; p < 1000; ++p)
    dev = std::max(dev, std::abs(dense[static_cast<size_t>(p)] -
                                 piecewise_linear_eval(s, two_pi * p / 1000)));
  CHECK(dev <= 1e-6);
}

TEST_CASE("smoothness-3 spline equals the periodic cubic spline",
          "[oracles]") {
  const SampleSet s = tst::demo_samples(0);
  const Spline sp = build_spline(
      s, tst::make_config(0, 0, 3, tst::unit_shape(), tst::unit_shape()));
  const std::vector<double> dense = sp.eval_uniform(1000);
  double dev = 0.0;
  for (int p = 0; p < 1000; ++p)
    dev = std::max(dev, std::abs(dense[static_cast<size_t>(p)] -
                                 periodic_cubic_eval(s, two_pi * p / 1000)));
  CHECK(dev <= 1e-6);
  INFO("max deviation r=3 vs cubic: " << dev);
}

TEST_CASE("quadratic oracle interpolates at the sample nodes", "[oracles]") {
  for (int kind : {0, 1}) {
    const SampleSet s = tst::demo_samples(kind);
    for (int j = 0; j < 9; ++j)
      CHECK(periodic_quadratic_eval(s, s.grid().node(j)) ==
            Catch::Approx(s.value(j)).margin(1e-12));
    // C1 at the breakpoints (the opposite grid's nodes)
    const Grid breaks = make_grid(kind == 0 ? GridIndex::midpoint
                                            : GridIndex::nodal, 9);
    const double eps = 1e-6;
    for (int j = 0; j < 9; ++j) {
      const double t = breaks.node(j);
      const double right = (periodic_quadratic_eval(s, t + 2 * eps) -
                            periodic_quadratic_eval(s, t + eps)) / eps;
      const double left = (periodic_quadratic_eval(s, t - eps) -
                           periodic_quadratic_eval(s, t - 2 * eps)) / eps;
      CHECK(std::abs(right - left) <= 1e-4);
    }
  }
  const SampleSet c = sample_values(make_grid(GridIndex::midpoint, 9),
                                    std::vector<double>(9, 1.5));
  CHECK(periodic_quadratic_eval(c, 2.0) == Catch::Approx(1.5).margin(1e-13));
}

TEST_CASE("even-smoothness spline pairs with the quadratic oracle on matched "
          "grids", "[oracles]") {
  // Matched grids at r = 2 reproduce the quadratic interpolant whose
  // breakpoints sit on the opposite grid.
  for (int kind : {0, 1}) {
    const SampleSet s = tst::demo_samples(kind);
    const Spline sp = build_spline(
        s, tst::make_config(kind, kind, 2, tst::unit_shape(),
                            tst::unit_shape(), 200'000));
    const std::vector<double> dense = sp.eval_uniform(1000);
    double dev = 0.0;
    for (int p = 0; p < 1000; ++p)
      dev = std::max(dev,
                     std::abs(dense[static_cast<size_t>(p)] -
                              periodic_quadratic_eval(s, two_pi * p / 1000)));
    CHECK(dev <= 1e-6);
  }

  // The crossed-grid pairing does not: report the residual, no gate.
  const SampleSet s1 = tst::demo_samples(1);
  const Spline crossed = build_spline(
      s1, tst::make_config(0, 1, 2, tst::unit_shape(), tst::unit_shape(),
                           200'000));
  const std::vector<double> dense = crossed.eval_uniform(1000);
  double dev = 0.0;
  for (int p = 0; p < 1000; ++p)
    dev = std::max(dev, std::abs(dense[static_cast<size_t>(p)] -
                                 periodic_quadratic_eval(s1, two_pi * p / 1000)));
  WARN("crossed-grid r=2 vs quadratic oracle residual (reported only): "
       << dev);
}

TEST_CASE("brute-force series agrees with the adaptive evaluation",
          "[oracles]") {
  const SampleSet s = tst::demo_samples(0);
  for (int r : {2, 3}) {
    const Spline sp = build_spline(
        s, tst::make_config(0, 0, r, tst::unit_shape(), tst::unit_shape()));
    for (double t : {0.21, 2.6, 5.5})
      CHECK(std::abs(dense_series_eval(sp, t, 100'000) - sp.eval(t)) <=
            10 * sp.config().trunc.tail_tol);
    // non-unit shapes amplify the tail by the factor magnitudes; sanity only
    const Spline gen = build_spline(
        s, tst::make_config(0, 0, r, tst::demo_gamma(), tst::demo_eta()));
    CHECK(std::abs(dense_series_eval(gen, 2.6, 100'000) - gen.eval(2.6)) <=
          1e-7);
  }

  // alias-free: identical series, any depth
  const ShapeVector plain(1, 0, 0);
  const Spline poly = build_spline(s, tst::make_config(0, 0, 2, plain, plain));
  CHECK(dense_series_eval(poly, 1.1, 10) ==
        Catch::Approx(poly.eval(1.1)).margin(1e-14));

  // r = 0: the residual is reported, not asserted
  const Spline rough = build_spline(
      s, tst::make_config(0, 0, 0, tst::unit_shape(), tst::unit_shape(),
                          /*max_m=*/2000));
  const double gap =
      std::abs(dense_series_eval(rough, 0.9, 20'000) - rough.eval(0.9));
  CHECK(std::isfinite(gap));
  WARN("r=0 truncation residual at t=0.9 (reported only): " << gap);

  // the reference must not be shallower than the spline itself
  const Spline deep = build_spline(
      s, tst::make_config(0, 0, 2, tst::unit_shape(), tst::unit_shape()));
  CHECK_THROWS_AS(dense_series_eval(deep, 0.5, 10), Error);
}
