#pragma once

#include <cstddef>

namespace pf::simd::detail {

//! Entry points implemented by each backend.
struct KernelTable {
  double (*gaussian_kernel_sum)(const double* xs, std::size_t n, double center,
                                double inv_bw);
  void (*gaussian_grid_accumulate)(const double* xs, std::size_t n,
                                   double grid0, double step, std::size_t m,
                                   double inv_bw, double cutoff_radius,
                                   double* out);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*squared_distance)(const double* a, const double* b, std::size_t n);
};

//! Grid-node index range [lo, hi) within `radius` of sample x. Shared by all
//! backends so they select identical windows.
inline void grid_window(double x, double grid0, double step, std::size_t m,
                        double radius, std::size_t& lo, std::size_t& hi) {
  const double wlo = (x - radius - grid0) / step;
  const double whi = (x + radius - grid0) / step;
  const double dm = static_cast<double>(m);
  double flo = wlo <= 0.0 ? 0.0 : __builtin_ceil(wlo);
  if (flo > dm) flo = dm;
  double fhi = whi < 0.0 ? -1.0 : __builtin_floor(whi);
  if (fhi >= dm) fhi = dm - 1.0;
  lo = static_cast<std::size_t>(flo);
  hi = fhi < flo ? lo : static_cast<std::size_t>(fhi) + 1;
}

const KernelTable& scalar_table();

#if defined(__x86_64__) || defined(_M_X64)
#define PF_SIMD_HAVE_AVX2 1
const KernelTable& avx2_table();
#endif

}  // namespace pf::simd::detail
