#include "pf/stats/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "pf/simd/simd.hpp"

namespace pf {

KdeDensity::KdeDensity(std::vector<double> sorted, double bandwidth)
    : sorted_(std::move(sorted)),
      bandwidth_(bandwidth),
      inv_bw_(1.0 / bandwidth),
      norm_(1.0 / (static_cast<double>(sorted_.size()) * bandwidth *
                   std::sqrt(2.0 * std::numbers::pi))) {}

double KdeDensity::operator()(double x) const {
  const double radius = kKdeCutoffSigmas * bandwidth_;
  const auto lo = std::lower_bound(sorted_.begin(), sorted_.end(), x - radius);
  const auto hi = std::upper_bound(lo, sorted_.end(), x + radius);
  if (lo == hi) return 0.0;
  return norm_ * pf::simd::gaussian_kernel_sum(
                     &*lo, static_cast<std::size_t>(hi - lo), x, inv_bw_);
}

void KdeDensity::evaluate_uniform_grid(double grid0, double step,
                                       std::size_t m,
                                       std::span<double> out) const {
  if (out.size() < m) {
    throw std::invalid_argument("evaluate_uniform_grid: output too small");
  }
  if (!(step > 0.0) || step * inv_bw_ > 1.0) {
    Density1d::evaluate_uniform_grid(grid0, step, m, out);
    return;
  }
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(m), 0.0);
  pf::simd::gaussian_grid_accumulate(sorted_.data(), sorted_.size(), grid0,
                                     step, m, inv_bw_, kKdeCutoffSigmas,
                                     out.data());
  for (std::size_t j = 0; j < m; ++j) out[j] *= norm_;
}

Interval KdeDensity::support() const {
  return {sorted_.front() - 4.0 * bandwidth_,
          sorted_.back() + 4.0 * bandwidth_};
}

KdeDensity kde_fit(const Samples1d& samples, double bw_adjust) {
  if (!(bw_adjust > 0.0)) {
    throw std::invalid_argument("kde_fit: bw_adjust must be > 0");
  }
  const std::size_t n = samples.size();
  if (n < 2) {
    throw std::invalid_argument("kde_fit: need at least two samples");
  }
  // The standard deviation feeding the bandwidth rule is computed over the
  // samples in sorted order so the whole fit is exactly permutation
  // invariant, not merely up to summation rounding.
  std::vector<double> sorted(samples.values().begin(), samples.values().end());
  std::sort(sorted.begin(), sorted.end());
  const double sd = std::sqrt(variance(sorted));
  if (!(sd > 0.0)) {
    throw std::invalid_argument(
        "kde_fit: all samples identical (zero bandwidth)");
  }
  const double scott = std::pow(static_cast<double>(n), -0.2) * sd;
  const double bandwidth = bw_adjust * scott;
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw std::invalid_argument("kde_fit: bandwidth must be > 0");
  }
  return KdeDensity(std::move(sorted), bandwidth);
}

KdeDensity kde_fit_with_bandwidth(const Samples1d& samples, double bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw std::invalid_argument("kde_fit_with_bandwidth: bandwidth must be > 0");
  }
  std::vector<double> sorted(samples.values().begin(), samples.values().end());
  std::sort(sorted.begin(), sorted.end());
  return KdeDensity(std::move(sorted), bandwidth);
}

}  // namespace pf
