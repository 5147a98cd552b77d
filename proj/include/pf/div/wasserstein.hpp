#pragma once

#include <span>

namespace pf {

//! Wasserstein-1 distance between the empirical distributions of two 1-D
//! sample sets, via the exact integral of |F - G| between the empirical
//! CDFs (no resampling). For equal sizes this equals the mean of
//! |x_(i) - y_(i)| over sorted order. Inputs must be nonempty and finite.
double wasserstein1_empirical(std::span<const double> xs,
                              std::span<const double> ys);

}  // namespace pf
