#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "trigspline/errors.hpp"

namespace trigspline {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// The two uniform node families on [0, 2pi).  The nodal grid starts at 0;
/// the midpoint grid is shifted by half a step, so each of its nodes sits
/// midway between consecutive nodal-grid nodes.
enum class GridIndex : int {
  nodal = 0,   // t_j = 2*pi*j/N,       j = 0..N-1
  midpoint = 1 // t_j = pi*(2*j + 1)/N, j = 0..N-1
};

inline int to_int(GridIndex g) { return static_cast<int>(g); }

inline GridIndex grid_index_from_int(int v) {
  require(v == 0 || v == 1, ErrorCode::invalid_argument,
          "grid index must be 0 or 1, got " + std::to_string(v));
  return static_cast<GridIndex>(v);
}

/// N equally spaced angles on [0, 2pi), N odd and >= 3.  Nodes come from the
/// closed formula, never from accumulation.  Immutable after construction.
class Grid {
 public:
  int size() const { return node_count_; }
  GridIndex kind() const { return kind_; }
  double spacing() const { return two_pi / node_count_; }
  double node(int j) const { return nodes_[static_cast<size_t>(j)]; }
  const std::vector<double>& nodes() const { return nodes_; }
  int harmonics() const { return (node_count_ - 1) / 2; }

  friend Grid make_grid(GridIndex kind, int node_count);

 private:
  Grid(GridIndex kind, int node_count, std::vector<double> nodes)
      : kind_(kind), node_count_(node_count), nodes_(std::move(nodes)) {}

  GridIndex kind_;
  int node_count_;
  std::vector<double> nodes_;
};

inline Grid make_grid(GridIndex kind, int node_count) {
  require(node_count % 2 != 0, ErrorCode::even_node_count,
          "node count must be odd, got " + std::to_string(node_count));
  require(node_count >= 3, ErrorCode::too_few_nodes,
          "node count must be >= 3, got " + std::to_string(node_count));
  std::vector<double> nodes(static_cast<size_t>(node_count));
  // Extended precision keeps the midpoint relation between the two grid
  // kinds tight to a double rounding.
  const long double pi_l = 3.14159265358979323846264338327950288L;
  for (int j = 0; j < node_count; ++j) {
    const long double num = (kind == GridIndex::nodal)
                                ? pi_l * 2.0L * j
                                : pi_l * (2.0L * j + 1.0L);
    nodes[static_cast<size_t>(j)] = static_cast<double>(num / node_count);
  }
  return Grid(kind, node_count, std::move(nodes));
}

/// Function values bound to the nodes of one grid.
class SampleSet {
 public:
  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double value(int j) const { return values_[static_cast<size_t>(j)]; }
  int size() const { return grid_.size(); }

  friend SampleSet sample_values(const Grid& grid, std::vector<double> values);

 private:
  SampleSet(Grid grid, std::vector<double> values)
      : grid_(std::move(grid)), values_(std::move(values)) {}

  Grid grid_;
  std::vector<double> values_;
};

inline SampleSet sample_values(const Grid& grid, std::vector<double> values) {
  require(static_cast<int>(values.size()) == grid.size(),
          ErrorCode::length_mismatch,
          "expected " + std::to_string(grid.size()) + " values, got " +
              std::to_string(values.size()));
  for (double v : values)
    require(std::isfinite(v), ErrorCode::non_finite_value,
            "sample values must be finite");
  return SampleSet(grid, std::move(values));
}

} // namespace trigspline
