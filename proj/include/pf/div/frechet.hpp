#pragma once

#include <cstddef>
#include <vector>

#include "pf/div/feature_set.hpp"

namespace pf {

//! Mean vector and covariance matrix (row-major, d x d) fitted to a feature
//! set.
struct GaussianMoments {
  std::vector<double> mean;
  std::vector<double> covariance;
  std::size_t dim() const { return mean.size(); }
};

//! Diagnostics from the Fréchet cross-term eigendecomposition.
struct FrechetInfo {
  double min_eigenvalue = 0.0;   // most negative cross-term eigenvalue
  double max_eigenvalue = 0.0;   // largest cross-term eigenvalue
  bool clamped_warning = false;  // min < -1e-6 * max triggered a warning
};

//! Sample mean and unbiased (n-1) sample covariance. Requires n >= 2.
//! Rows are accumulated in a canonical (lexicographic) order, so the fitted
//! moments are exactly invariant to row permutations.
GaussianMoments fit_gaussian_moments(const FeatureSet& a);

//! Fréchet distance between Gaussians:
//! ||mu_p - mu_q||^2 + tr(S_p + S_q - 2 (S_p^1/2 S_q S_p^1/2)^1/2).
//!
//! The cross term uses the symmetric product S_p^1/2 S_q S_p^1/2, whose
//! eigenvalues are clamped at 0; when the most negative eigenvalue is below
//! -1e-6 times the largest one a warning is printed to stderr (and recorded
//! in `info` when given). Inputs must share a dimension, be symmetric
//! within 1e-10, and have eigenvalues >= -1e-8 (numerical PSD); violations
//! throw std::invalid_argument. The exact quantity is nonnegative, so a
//! slightly negative rounded result is clamped to 0.
double frechet_distance(const GaussianMoments& p, const GaussianMoments& q,
                        FrechetInfo* info = nullptr);

}  // namespace pf
