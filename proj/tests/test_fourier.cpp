#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "test_common.hpp"
#include "trigspline/trigspline.hpp"

using namespace trigspline;

TEST_CASE("constant samples give only the mean term", "[fourier]") {
  const double c = 2.75;
  const SampleSet s =
      sample_values(make_grid(GridIndex::midpoint, 9),
                    std::vector<double>(9, c));
  const TrigCoeffs coeffs = dft_coefficients(s);
  CHECK(coeffs.a0 == Catch::Approx(2 * c).margin(1e-14));
  for (int k = 1; k <= 4; ++k) {
    CHECK(std::abs(coeffs.a[static_cast<size_t>(k - 1)]) <= 1e-14);
    CHECK(std::abs(coeffs.b[static_cast<size_t>(k - 1)]) <= 1e-14);
  }
  CHECK(eval_trig_polynomial(coeffs, 1.7) == Catch::Approx(c).margin(1e-13));
}

TEST_CASE("single harmonic is recovered exactly", "[fourier]") {
  const Grid g = make_grid(GridIndex::nodal, 9);
  std::vector<double> vals(9);
  for (int j = 0; j < 9; ++j) vals[static_cast<size_t>(j)] = std::cos(g.node(j));
  const TrigCoeffs coeffs = dft_coefficients(sample_values(g, vals));
  CHECK(coeffs.a[0] == Catch::Approx(1.0).margin(1e-14));
  CHECK(std::abs(coeffs.a0) <= 1e-14);
  for (int k = 1; k <= 4; ++k) {
    if (k > 1) CHECK(std::abs(coeffs.a[static_cast<size_t>(k - 1)]) <= 1e-14);
    CHECK(std::abs(coeffs.b[static_cast<size_t>(k - 1)]) <= 1e-14);
  }
}

TEST_CASE("demo data mean coefficient", "[fourier]") {
  const TrigCoeffs coeffs = dft_coefficients(tst::demo_samples(0));
  double sum = 0.0;
  for (double v : tst::demo_data()) sum += v; // independent summation
  CHECK(sum == 20.0);
  CHECK(coeffs.a0 == Catch::Approx(2.0 * sum / 9.0).margin(1e-15));
  CHECK(coeffs.a0 == Catch::Approx(40.0 / 9.0).margin(1e-15));
}

TEST_CASE("polynomial interpolates the demo data at the first node",
          "[fourier]") {
  const TrigCoeffs coeffs = dft_coefficients(tst::demo_samples(0));
  CHECK(eval_trig_polynomial(coeffs, 0.0) ==
        Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("polynomial is 2pi periodic", "[fourier]") {
  const TrigCoeffs coeffs = dft_coefficients(tst::demo_samples(1));
  for (double t : {0.3, 2.1, 5.9}) {
    CHECK(eval_trig_polynomial(coeffs, t) ==
          Catch::Approx(eval_trig_polynomial(coeffs, t + two_pi))
              .margin(1e-12));
  }
}

TEST_CASE("interpolation exactness on random data", "[fourier]") {
  unsigned seed = 1234;
  for (int n : {3, 9, 33, 101}) {
    for (int kind = 0; kind < 2; ++kind) {
      const Grid g = make_grid(grid_index_from_int(kind), n);
      const SampleSet s = sample_values(g, tst::random_values(n, seed++));
      const TrigCoeffs coeffs = dft_coefficients(s);
      for (int j = 0; j < n; ++j) {
        CHECK(eval_trig_polynomial(coeffs, g.node(j)) ==
              Catch::Approx(s.value(j)).margin(1e-10));
      }
    }
  }
}

TEST_CASE("coefficients are linear in the samples", "[fourier]") {
  const Grid g = make_grid(GridIndex::nodal, 33);
  const std::vector<double> f = tst::random_values(33, 7);
  const std::vector<double> h = tst::random_values(33, 8);
  std::vector<double> fh(33);
  for (int j = 0; j < 33; ++j)
    fh[static_cast<size_t>(j)] =
        f[static_cast<size_t>(j)] + h[static_cast<size_t>(j)];
  const TrigCoeffs cf = dft_coefficients(sample_values(g, f));
  const TrigCoeffs ch = dft_coefficients(sample_values(g, h));
  const TrigCoeffs cfh = dft_coefficients(sample_values(g, fh));
  CHECK(cfh.a0 == Catch::Approx(cf.a0 + ch.a0).margin(1e-12));
  for (size_t i = 0; i < cf.a.size(); ++i) {
    CHECK(cfh.a[i] == Catch::Approx(cf.a[i] + ch.a[i]).margin(1e-12));
    CHECK(cfh.b[i] == Catch::Approx(cf.b[i] + ch.b[i]).margin(1e-12));
  }
}

TEST_CASE("polynomial Parseval identity versus quadrature", "[fourier]") {
  const TrigCoeffs coeffs = dft_coefficients(tst::demo_samples(0));
  double closed = 0.5 * coeffs.a0 * coeffs.a0;
  for (size_t i = 0; i < coeffs.a.size(); ++i)
    closed += coeffs.a[i] * coeffs.a[i] + coeffs.b[i] * coeffs.b[i];

  const int q = 4096;
  double quad = 0.0;
  for (int p = 0; p < q; ++p) {
    const double v = eval_trig_polynomial(coeffs, two_pi * p / q);
    quad += v * v;
  }
  quad *= 2.0 / q; // (1/pi) * (2pi/q) * sum
  CHECK(quad == Catch::Approx(closed).margin(1e-9));
}
