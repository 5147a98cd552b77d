#pragma once

#include "pf/div/quadrature.hpp"
#include "pf/stats/density.hpp"
#include "pf/stats/pmf.hpp"

namespace pf {

//! Total variation distance between pmfs on the same alphabet:
//! 0.5 * sum_i |p_i - q_i|. Throws std::invalid_argument on size mismatch.
double tv_discrete(const DiscretePmf& p, const DiscretePmf& q);

//! Total variation distance 0.5 * integral |a(x) - b(x)| dx over the spec
//! interval, split at the spec breakpoints. The Richardson error estimate of
//! the returned value must be <= spec.tolerance; otherwise throws
//! std::runtime_error.
double tv_continuous_1d(const Density1d& a, const Density1d& b,
                        const QuadratureSpec& spec = {});

}  // namespace pf
