#include "pf/stats/density.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pf {
namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

}  // namespace

void Density1d::evaluate_uniform_grid(double grid0, double step, std::size_t m,
                                      std::span<double> out) const {
  if (out.size() < m) {
    throw std::invalid_argument("evaluate_uniform_grid: output too small");
  }
  for (std::size_t j = 0; j < m; ++j) {
    out[j] = (*this)(grid0 + static_cast<double>(j) * step);
  }
}

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
}

double truncated_normal_pdf(double x, TruncationSide side, double cut) {
  if (!std::isfinite(cut)) {
    throw std::invalid_argument("truncated_normal_pdf: cut must be finite");
  }
  if (side == TruncationSide::above_cut) {
    return x >= cut ? normal_pdf(x) / (1.0 - normal_cdf(cut)) : 0.0;
  }
  return x < cut ? normal_pdf(x) / normal_cdf(cut) : 0.0;
}

NormalDensity::NormalDensity(double mean, double sd) : mean_(mean), sd_(sd) {
  if (!std::isfinite(mean) || !(sd > 0.0)) {
    throw std::invalid_argument("NormalDensity: require finite mean, sd > 0");
  }
}

double NormalDensity::operator()(double x) const {
  const double u = (x - mean_) / sd_;
  return kInvSqrt2Pi * std::exp(-0.5 * u * u) / sd_;
}

Interval NormalDensity::support() const {
  return {mean_ - 10.0 * sd_, mean_ + 10.0 * sd_};
}

TruncatedNormalDensity::TruncatedNormalDensity(TruncationSide side, double cut)
    : side_(side), cut_(cut) {
  if (!std::isfinite(cut)) {
    throw std::invalid_argument("TruncatedNormalDensity: cut must be finite");
  }
}

double TruncatedNormalDensity::operator()(double x) const {
  return truncated_normal_pdf(x, side_, cut_);
}

Interval TruncatedNormalDensity::support() const {
  if (side_ == TruncationSide::above_cut) {
    return {cut_, std::max(cut_, 0.0) + 12.0};
  }
  return {std::min(cut_, 0.0) - 12.0, cut_};
}

}  // namespace pf
