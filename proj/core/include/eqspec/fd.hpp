#pragma once

#include <span>
#include <vector>

#include "eqspec/grid.hpp"

namespace eqspec {

// Finite-difference derivative of sampled data on a uniform grid.
// order = derivative order (1..4). Centered stencils in the interior
// (exact for polynomials up to the stencil degree), one-sided at the ends.
std::vector<double> fd_derivative(std::span<const double> samples,
                                  const Grid1D& grid, int order);

}  // namespace eqspec
