#pragma once

#include <stdexcept>
#include <string>

namespace trigspline {

/// Classifies every failure the library can raise.  The CLI maps these to
/// process exit codes, so the set is part of the public contract.
enum class ErrorCode {
  even_node_count,    // grids require an odd number of nodes
  too_few_nodes,      // fewer than 3 nodes
  length_mismatch,    // sample count does not match the grid
  non_finite_value,   // NaN or infinity in user data
  io_error,           // unreadable or unparsable input
  grid_mismatch,      // samples live on a different grid than configured
  zero_shape_vector,  // all three shape components are zero
  invalid_argument,   // other configuration violations
  singular_factor,    // an interpolation factor vanished; cannot divide
  tail_not_converged, // the alias tail bound cannot reach the tolerance
  requires_smoothness // operation needs r >= 1
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

} // namespace trigspline
