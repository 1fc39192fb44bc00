#pragma once

// Umbrella header for the numeric core.  JSON adapters live in
// trigspline/serialize.hpp and are opt-in.

#include "trigspline/errors.hpp"
#include "trigspline/fourier.hpp"
#include "trigspline/grids.hpp"
#include "trigspline/kernels.hpp"
#include "trigspline/oracles.hpp"
#include "trigspline/spline.hpp"
