#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "test_common.hpp"
#include "trigspline/trigspline.hpp"

using namespace trigspline;

TEST_CASE("nodal grid follows the closed formula", "[grids]") {
  const Grid g = make_grid(GridIndex::nodal, 9);
  REQUIRE(g.size() == 9);
  REQUIRE(g.kind() == GridIndex::nodal);
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(1) == Catch::Approx(two_pi / 9).margin(1e-15));
  CHECK(g.node(2) == Catch::Approx(2 * two_pi / 9).margin(1e-15));
  for (int j = 0; j < 9; ++j) {
    CHECK(g.node(j) >= 0.0);
    CHECK(g.node(j) < two_pi);
    if (j > 0) CHECK(g.node(j) > g.node(j - 1));
  }
}

TEST_CASE("midpoint grid starts at pi/N and bisects the nodal grid",
          "[grids]") {
  const Grid g0 = make_grid(GridIndex::nodal, 9);
  const Grid g1 = make_grid(GridIndex::midpoint, 9);
  CHECK(g1.node(0) == Catch::Approx(std::numbers::pi / 9).margin(1e-16));
  for (int j = 0; j < 9; ++j) {
    const double next = (j + 1 < 9) ? g0.node(j + 1) : g0.node(0) + two_pi;
    CHECK(std::abs((g0.node(j) + next) / 2 - g1.node(j)) <= 1e-15);
  }
}

TEST_CASE("grid validation", "[grids]") {
  CHECK_THROWS_MATCHES(make_grid(GridIndex::nodal, 4), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::even_node_count;
                       }));
  CHECK_THROWS_MATCHES(make_grid(GridIndex::nodal, 1), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::too_few_nodes;
                       }));
  CHECK_NOTHROW(make_grid(GridIndex::midpoint, 3));
}

TEST_CASE("spacing and midpoint hold across odd node counts", "[grids]") {
  // Node spacing is uniform to the rounding of the node magnitudes.
  const double spacing_tol =
      4 * std::numeric_limits<double>::epsilon() * two_pi;
  for (int n = 3; n <= 101; n += 2) {
    const Grid g0 = make_grid(GridIndex::nodal, n);
    const Grid g1 = make_grid(GridIndex::midpoint, n);
    const double h = two_pi / n;
    for (int j = 0; j + 1 < n; ++j) {
      CHECK(std::abs(g0.node(j + 1) - g0.node(j) - h) <= spacing_tol);
      CHECK(std::abs(g1.node(j + 1) - g1.node(j) - h) <= spacing_tol);
      CHECK(std::abs((g0.node(j) + g0.node(j + 1)) / 2 - g1.node(j)) <=
            1e-15);
    }
  }
}

TEST_CASE("make_grid is deterministic", "[grids]") {
  const Grid a = make_grid(GridIndex::midpoint, 33);
  const Grid b = make_grid(GridIndex::midpoint, 33);
  REQUIRE(a.nodes() == b.nodes());
}

TEST_CASE("sample ingestion", "[grids]") {
  const Grid g = make_grid(GridIndex::nodal, 9);
  CHECK_NOTHROW(sample_values(g, tst::demo_data()));

  std::vector<double> eight(8, 1.0);
  CHECK_THROWS_MATCHES(sample_values(g, eight), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::length_mismatch;
                       }));

  const Grid g3 = make_grid(GridIndex::midpoint, 3);
  const SampleSet s = sample_values(g3, {2.5, 2.5, 2.5});
  CHECK(s.value(2) == 2.5);

  std::vector<double> bad{1.0, std::nan(""), 0.0, 1, 1, 1, 1, 1, 1};
  CHECK_THROWS_MATCHES(sample_values(g, bad), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == ErrorCode::non_finite_value;
                       }));
}
