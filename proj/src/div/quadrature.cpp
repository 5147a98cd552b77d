#include "pf/div/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pf/div/tv.hpp"
#include "quadrature_detail.hpp"

namespace pf {
namespace detail {

std::vector<double> segment_edges(const QuadratureSpec& spec) {
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) ||
      !(spec.lo < spec.hi)) {
    throw std::invalid_argument("QuadratureSpec: require finite lo < hi");
  }
  if (spec.points_per_segment < 3) {
    throw std::invalid_argument("QuadratureSpec: need >= 3 points per segment");
  }
  if (!(spec.tolerance > 0.0)) {
    throw std::invalid_argument("QuadratureSpec: tolerance must be > 0");
  }
  std::vector<double> edges{spec.lo};
  for (double b : spec.breakpoints) {
    if (!(b > edges.back()) || !(b < spec.hi)) {
      throw std::invalid_argument(
          "QuadratureSpec: breakpoints must be strictly increasing inside "
          "(lo, hi)");
    }
    edges.push_back(b);
  }
  edges.push_back(spec.hi);
  return edges;
}

Estimate integrate_abs_diff(const Density1d& a, const Density1d* b,
                            const QuadratureSpec& spec) {
  const std::vector<double> edges = segment_edges(spec);
  // Odd node count so nodes 0, 2, 4, ... form the embedded half-resolution
  // trapezoid grid for the Richardson error estimate.
  const std::size_t m = spec.points_per_segment | 1;
  std::vector<double> va(m);
  std::vector<double> vb(b != nullptr ? m : 0);

  double total = 0.0;
  double err = 0.0;
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double s0 = edges[s];
    const double s1 = edges[s + 1];
    const double step = (s1 - s0) / static_cast<double>(m - 1);
    a.evaluate_uniform_grid(s0, step, m, va);
    if (b != nullptr) b->evaluate_uniform_grid(s0, step, m, vb);
    // One-sided limits at interior breakpoints.
    if (s > 0) {
      const double x = std::nextafter(s0, s1);
      va[0] = a(x);
      if (b != nullptr) vb[0] = (*b)(x);
    }
    if (s + 2 < edges.size()) {
      const double x = std::nextafter(s1, s0);
      va[m - 1] = a(x);
      if (b != nullptr) vb[m - 1] = (*b)(x);
    }
    if (b != nullptr) {
      for (std::size_t j = 0; j < m; ++j) va[j] = std::abs(va[j] - vb[j]);
    }
    double fine = 0.0;
    for (std::size_t j = 0; j < m; ++j) fine += va[j];
    fine -= 0.5 * (va[0] + va[m - 1]);
    double coarse = 0.0;
    for (std::size_t j = 0; j < m; j += 2) coarse += va[j];
    coarse -= 0.5 * (va[0] + va[m - 1]);
    const double integral_fine = step * fine;
    const double integral_coarse = 2.0 * step * coarse;
    total += integral_fine;
    err += std::abs(integral_fine - integral_coarse) / 3.0;
  }
  return {total, err};
}

}  // namespace detail

double integrate_density(const Density1d& p, const QuadratureSpec& spec) {
  const detail::Estimate est = detail::integrate_abs_diff(p, nullptr, spec);
  if (est.error > spec.tolerance) {
    throw std::runtime_error(
        "integrate_density: quadrature error estimate " +
        std::to_string(est.error) + " exceeds tolerance " +
        std::to_string(spec.tolerance));
  }
  return est.value;
}

double tv_continuous_1d(const Density1d& a, const Density1d& b,
                        const QuadratureSpec& spec) {
  const detail::Estimate est = detail::integrate_abs_diff(a, &b, spec);
  const double tv = 0.5 * est.value;
  const double err = 0.5 * est.error;
  if (err > spec.tolerance) {
    throw std::runtime_error("tv_continuous_1d: quadrature error estimate " +
                             std::to_string(err) + " exceeds tolerance " +
                             std::to_string(spec.tolerance));
  }
  return tv;
}

}  // namespace pf
