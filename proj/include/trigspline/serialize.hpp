#pragma once

// JSON adapters for the CLI and for reproducible pipelines.  Kept separate
// from the numeric headers so the core library does not pull in the JSON
// dependency.

#include <string>

#include "json.hpp"
#include "trigspline/fourier.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {

inline nlohmann::json to_json(const TrigCoeffs& c) {
  return nlohmann::json{{"n", c.harmonics()},
                        {"grid_kind", to_int(c.grid_kind)},
                        {"a0", c.a0},
                        {"a", c.a},
                        {"b", c.b}};
}

inline TrigCoeffs coeffs_from_json(const nlohmann::json& j) {
  TrigCoeffs c;
  const int n = j.at("n").get<int>();
  c.node_count = 2 * n + 1;
  c.grid_kind = grid_index_from_int(j.at("grid_kind").get<int>());
  c.a0 = j.at("a0").get<double>();
  c.a = j.at("a").get<std::vector<double>>();
  c.b = j.at("b").get<std::vector<double>>();
  require(static_cast<int>(c.a.size()) == n &&
              static_cast<int>(c.b.size()) == n,
          ErrorCode::length_mismatch,
          "coefficient arrays must hold n entries");
  return c;
}

inline nlohmann::json to_json(const ShapeVector& v) {
  return nlohmann::json::array({v.principal, v.upper, v.lower});
}

inline ShapeVector shape_from_json(const nlohmann::json& j) {
  require(j.is_array() && j.size() == 3, ErrorCode::invalid_argument,
          "shape vector must be an array of 3 numbers");
  return ShapeVector(j[0].get<double>(), j[1].get<double>(),
                     j[2].get<double>());
}

inline nlohmann::json to_json(const SplineConfig& cfg) {
  require(cfg.factor.kind() == ConvergenceFactor::Kind::sinc_power,
          ErrorCode::invalid_argument,
          "custom convergence factors are not serializable");
  return nlohmann::json{
      {"i1", to_int(cfg.crosslink)},
      {"i2", to_int(cfg.interpolation)},
      {"r", cfg.smoothness()},
      {"gamma", to_json(cfg.gamma)},
      {"eta", to_json(cfg.eta)},
      {"factor", {{"kind", "sinc"}, {"alpha", cfg.factor.alpha()}}},
      {"trunc",
       {{"max_m", cfg.trunc.max_m}, {"tail_tol", cfg.trunc.tail_tol}}}};
}

inline nlohmann::json to_json(const Spline& sp) {
  return nlohmann::json{{"config", to_json(sp.config())},
                        {"coeffs", to_json(sp.coeffs())},
                        {"factor_cos", sp.factor_cos()},
                        {"factor_sin", sp.factor_sin()},
                        {"alias_terms", sp.alias_terms()},
                        {"tail_bound", sp.tail_bound()},
                        {"tail_converged", sp.tail_converged()}};
}

inline nlohmann::json to_json(const PowerReport& p) {
  return nlohmann::json{{"total", p.total}, {"pc", p.pc}, {"ps", p.ps}};
}

} // namespace trigspline
