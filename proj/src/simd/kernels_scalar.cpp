#include <cmath>
#include <cstddef>

#include "kernel_table.hpp"

//! Portable reference kernels. Plain loops, libm exp, no FMA contraction
//! assumptions; these define the semantics the vector backends are tested
//! against.
namespace pf::simd::detail {
namespace {

double gaussian_kernel_sum_scalar(const double* xs, std::size_t n,
                                  double center, double inv_bw) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (center - xs[i]) * inv_bw;
    sum += std::exp(-0.5 * u * u);
  }
  return sum;
}

void gaussian_grid_accumulate_scalar(const double* xs, std::size_t n,
                                     double grid0, double step, std::size_t m,
                                     double inv_bw, double cutoff_radius,
                                     double* out) {
  if (m == 0) return;
  const double radius = cutoff_radius / inv_bw;
  const double gamma = 0.5 * inv_bw * inv_bw;
  // Ratio between consecutive ratio terms is constant along the grid:
  // E_{j+1} = E_j * T_j with T_{j+1} = T_j * q1.
  const double q1 = std::exp(-2.0 * gamma * step * step);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = xs[k];
    std::size_t lo, hi;
    grid_window(x, grid0, step, m, radius, lo, hi);
    if (lo >= hi) continue;
    const double d0 = (grid0 + static_cast<double>(lo) * step) - x;
    double e = std::exp(-gamma * d0 * d0);
    double t = std::exp(-gamma * (2.0 * step * d0 + step * step));
    for (std::size_t j = lo; j < hi; ++j) {
      out[j] += e;
      e *= t;
      t *= q1;
    }
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

double squared_distance_scalar(const double* a, const double* b,
                               std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{gaussian_kernel_sum_scalar,
                                 gaussian_grid_accumulate_scalar, dot_scalar,
                                 squared_distance_scalar};
  return table;
}

}  // namespace pf::simd::detail
