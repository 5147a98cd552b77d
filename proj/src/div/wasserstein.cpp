#include "pf/div/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pf {

double wasserstein1_empirical(std::span<const double> xs,
                              std::span<const double> ys) {
  if (xs.empty() || ys.empty()) {
    throw std::invalid_argument("wasserstein1_empirical: empty sample set");
  }
  std::vector<double> x(xs.begin(), xs.end());
  std::vector<double> y(ys.begin(), ys.end());
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("wasserstein1_empirical: non-finite sample");
    }
  }
  for (double v : y) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("wasserstein1_empirical: non-finite sample");
    }
  }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());

  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;
  double prev = std::min(x.front(), y.front());
  double w = 0.0;
  while (i < x.size() || j < y.size()) {
    const double cx = i < x.size() ? x[i] : inf;
    const double cy = j < y.size() ? y[j] : inf;
    const double cur = std::min(cx, cy);
    w += std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny) *
         (cur - prev);
    while (i < x.size() && x[i] == cur) ++i;
    while (j < y.size() && y[j] == cur) ++j;
    prev = cur;
  }
  return w;
}

}  // namespace pf
