#pragma once

#include <cstddef>
#include <vector>

#include "pf/stats/density.hpp"

namespace pf {

//! Composite-trapezoid quadrature controls. The interval is split at each
//! breakpoint (integrand kinks or jumps); every segment gets its own uniform
//! grid of points_per_segment nodes (rounded up to an odd count so a
//! half-resolution estimate embeds in the same grid). At interior
//! breakpoints the integrand is evaluated one ulp inside the segment, i.e.
//! as its one-sided limit, so a jump at a breakpoint costs no accuracy.
struct QuadratureSpec {
  double lo = -12.0;
  double hi = 12.0;
  std::vector<double> breakpoints{};
  std::size_t points_per_segment = 200000;
  double tolerance = 1e-6;
};

//! Integral of `p` over the spec interval. The Richardson error estimate
//! (|fine - half-resolution| / 3, summed over segments) must come in at or
//! under spec.tolerance; otherwise throws std::runtime_error.
double integrate_density(const Density1d& p, const QuadratureSpec& spec);

}  // namespace pf
