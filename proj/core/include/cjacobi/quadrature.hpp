#pragma once

#include <functional>

#include "cjacobi/types.hpp"

namespace cjacobi {

struct QuadratureResult {
  Complex value;
  double error_estimate;
  int intervals;
};

// Adaptive Gauss-Kronrod (15-7) with a worst-first interval heap and an
// absolute accuracy target. Handles integrable square-root endpoint
// behavior through plain bisection refinement.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b,
                           double abs_tol, int max_intervals = 8000);

}  // namespace cjacobi
