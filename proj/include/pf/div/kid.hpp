#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "pf/div/feature_set.hpp"

namespace pf {

//! Cubic polynomial kernel ((x . y) / d + 1)^3, the standard KID kernel.
//! Throws std::invalid_argument on dimension mismatch.
double polynomial_kernel(std::span<const double> x, std::span<const double> y);

enum class KidEstimator {
  //! (1/(n(n-1))) sum_{i!=j} k(a_i,a_j) + (1/(m(m-1))) sum_{i!=j} k(b_i,b_j)
  //! - (2/(nm)) sum_{i,j} k(a_i,b_j). May be negative.
  unbiased,
  //! Diagonal terms included with 1/n^2 and 1/m^2 weights; zero on
  //! identical sets.
  biased,
};

//! Subset-block averaging: the estimator is evaluated on n_subsets seeded
//! subsets of subset_size rows drawn without replacement from each set, and
//! the mean is returned. Deterministic for a fixed seed.
struct KidBlocks {
  std::size_t subset_size;
  std::size_t n_subsets;
  std::uint64_t seed;
};

//! Kernel distance (squared MMD) between two feature sets under the cubic
//! polynomial kernel. Requires >= 2 rows per set and equal dimensions.
//! Without blocks, rows enter the kernel sums in a canonical (lexicographic)
//! order, so the result is exactly invariant to row permutations of either
//! set; with blocks, the seeded subsets define the order instead.
double kid(const FeatureSet& a, const FeatureSet& b,
           const std::optional<KidBlocks>& blocks = std::nullopt,
           KidEstimator estimator = KidEstimator::unbiased);

}  // namespace pf
