#include "pf/stats/samples.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pf {

Samples1d::Samples1d(std::vector<double> values,
                     std::optional<std::uint64_t> seed)
    : values_(std::move(values)), seed_(seed) {
  if (values_.empty()) {
    throw std::invalid_argument("Samples1d: empty sample set");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("Samples1d: non-finite sample value");
    }
  }
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty input");
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw std::invalid_argument("variance: need at least two samples");
  }
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return ss / static_cast<double>(xs.size() - 1);
}

}  // namespace pf
