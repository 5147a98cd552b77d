#pragma once

#include <vector>

#include "pf/div/quadrature.hpp"

namespace pf::detail {

struct Estimate {
  double value;
  double error;
};

//! Validated segment edge list: lo, breakpoints..., hi.
std::vector<double> segment_edges(const QuadratureSpec& spec);

//! Trapezoid integral of |a - b| (or of a alone when b is null) over the
//! spec segments, with a Richardson error estimate.
Estimate integrate_abs_diff(const Density1d& a, const Density1d* b,
                            const QuadratureSpec& spec);

}  // namespace pf::detail
