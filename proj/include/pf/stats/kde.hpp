#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pf/stats/density.hpp"
#include "pf/stats/samples.hpp"

namespace pf {

//! Kernel evaluations are truncated beyond this many bandwidths from a
//! sample: exp(-9.5^2 / 2) < 3e-20, below the rounding floor of the kernel
//! sum, so the truncated evaluation is still an exact sum over kernels for
//! double precision purposes.
inline constexpr double kKdeCutoffSigmas = 9.5;

//! Gaussian kernel density estimate over 1-D samples.
//!
//! Samples are sorted once at construction, which makes the estimate
//! exactly invariant to the order samples arrive in and enables windowed
//! evaluation. Evaluation sums the kernel over every sample within
//! kKdeCutoffSigmas bandwidths (see above for why this is exact).
class KdeDensity final : public Density1d {
 public:
  double bandwidth() const { return bandwidth_; }
  std::size_t sample_count() const { return sorted_.size(); }

  double operator()(double x) const override;

  //! Uniform-grid evaluation through the multiplicative-recurrence kernel
  //! when the grid is finer than the bandwidth (agrees with pointwise
  //! evaluation to ~1e-10 relative); falls back to pointwise otherwise.
  void evaluate_uniform_grid(double grid0, double step, std::size_t m,
                             std::span<double> out) const override;

  //! [min sample - 4 bandwidths, max sample + 4 bandwidths].
  Interval support() const override;

 private:
  friend KdeDensity kde_fit(const Samples1d& samples, double bw_adjust);
  friend KdeDensity kde_fit_with_bandwidth(const Samples1d& samples,
                                           double bandwidth);
  KdeDensity(std::vector<double> sorted, double bandwidth);

  std::vector<double> sorted_;
  double bandwidth_;
  double inv_bw_;
  double norm_;  // 1 / (n * bandwidth * sqrt(2 pi))
};

//! Fit with bandwidth = bw_adjust * Scott's rule, where Scott's rule is
//! n^(-1/5) times the unbiased sample standard deviation. The bandwidth
//! rule is a configuration knob: use kde_fit_with_bandwidth to supply any
//! other rule's output directly.
//! Requires >= 2 samples, bw_adjust > 0, and non-identical samples (a zero
//! standard deviation would give a zero bandwidth); throws
//! std::invalid_argument otherwise.
KdeDensity kde_fit(const Samples1d& samples, double bw_adjust);

//! Fit with an explicitly chosen bandwidth (> 0).
KdeDensity kde_fit_with_bandwidth(const Samples1d& samples, double bandwidth);

}  // namespace pf
