// AVX2+FMA kernels. This translation unit is the only one compiled with
// -mavx2 -mfma; it is entered only after runtime CPU detection.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "kernel_table.hpp"

namespace pf::simd::detail {
namespace {

// exp(x) with arguments clamped to [-708, 709].
//
// Cody-Waite range reduction x = n*ln2 + r with |r| <= ln2/2, followed by a
// degree-13 Taylor polynomial for e^r (remainder < 6e-18 relative on that
// interval, below double rounding), then scaling by 2^n through exponent
// bits. |n| <= 1023 after clamping, so the scale factor is always normal.
constexpr double kExpLo = -708.0;
constexpr double kExpHi = 709.0;
constexpr double kLog2e = 1.4426950408889634073599;
constexpr double kLn2Hi = 6.93145751953125e-1;
constexpr double kLn2Lo = 1.42860682030941723212e-6;
constexpr double kExpC[14] = {
    1.0,
    1.0,
    0.5,
    0.16666666666666666,
    0.041666666666666664,
    0.008333333333333333,
    0.001388888888888889,
    0.0001984126984126984,
    2.48015873015873e-05,
    2.7557319223985893e-06,
    2.755731922398589e-07,
    2.505210838544172e-08,
    2.08767569878681e-09,
    1.6059043836821613e-10,
};

inline __m256d exp_pd(__m256d x) {
  x = _mm256_max_pd(x, _mm256_set1_pd(kExpLo));
  x = _mm256_min_pd(x, _mm256_set1_pd(kExpHi));

  const __m256d n =
      _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2e)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Hi), x);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Lo), r);

  __m256d p = _mm256_set1_pd(kExpC[13]);
  for (int k = 12; k >= 0; --k) {
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kExpC[k]));
  }

  const __m128i n32 = _mm256_cvtpd_epi32(n);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i scale_bits = _mm256_slli_epi64(
      _mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(scale_bits));
}

// Scalar mirror of exp_pd for loop tails: identical polynomial and
// reduction so a value lands in the same place regardless of lane position.
inline double exp_taylor(double x) {
  if (x < kExpLo) x = kExpLo;
  if (x > kExpHi) x = kExpHi;
  const double n = std::nearbyint(x * kLog2e);
  double r = std::fma(-n, kLn2Hi, x);
  r = std::fma(-n, kLn2Lo, r);
  double p = kExpC[13];
  for (int k = 12; k >= 0; --k) p = std::fma(p, r, kExpC[k]);
  return std::ldexp(p, static_cast<int>(n));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double gaussian_kernel_sum_avx2(const double* xs, std::size_t n, double center,
                                double inv_bw) {
  const __m256d c = _mm256_set1_pd(center);
  const __m256d ib = _mm256_set1_pd(inv_bw);
  const __m256d mhalf = _mm256_set1_pd(-0.5);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d u0 = _mm256_mul_pd(_mm256_sub_pd(c, _mm256_loadu_pd(xs + i)), ib);
    const __m256d u1 =
        _mm256_mul_pd(_mm256_sub_pd(c, _mm256_loadu_pd(xs + i + 4)), ib);
    acc0 = _mm256_add_pd(acc0, exp_pd(_mm256_mul_pd(mhalf, _mm256_mul_pd(u0, u0))));
    acc1 = _mm256_add_pd(acc1, exp_pd(_mm256_mul_pd(mhalf, _mm256_mul_pd(u1, u1))));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_mul_pd(_mm256_sub_pd(c, _mm256_loadu_pd(xs + i)), ib);
    acc0 = _mm256_add_pd(acc0, exp_pd(_mm256_mul_pd(mhalf, _mm256_mul_pd(u, u))));
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double u = (center - xs[i]) * inv_bw;
    sum += exp_taylor(-0.5 * u * u);
  }
  return sum;
}

void gaussian_grid_accumulate_avx2(const double* xs, std::size_t n,
                                   double grid0, double step, std::size_t m,
                                   double inv_bw, double cutoff_radius,
                                   double* out) {
  if (m == 0) return;
  const double radius = cutoff_radius / inv_bw;
  const double gamma = 0.5 * inv_bw * inv_bw;
  // Two interleaved 4-lane chains advance 8 grid nodes per iteration:
  // E_{j+8} = E_j * T_j, T_{j+8} = T_j * q8. Two chains keep the
  // multiplicative dependency off the critical path.
  const __m256d q8 = _mm256_set1_pd(std::exp(-128.0 * gamma * step * step));
  const __m256d gofs = _mm256_setr_pd(0.0, step, 2.0 * step, 3.0 * step);
  const __m256d vgamma = _mm256_set1_pd(-gamma);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = xs[k];
    std::size_t lo, hi;
    grid_window(x, grid0, step, m, radius, lo, hi);
    if (lo >= hi) continue;
    const double d0s = (grid0 + static_cast<double>(lo) * step) - x;
    std::size_t j = lo;
    if (hi - lo >= 8) {
      const __m256d d0 = _mm256_add_pd(_mm256_set1_pd(d0s), gofs);
      const __m256d d1 = _mm256_add_pd(d0, _mm256_set1_pd(4.0 * step));
      __m256d e0 = exp_pd(_mm256_mul_pd(vgamma, _mm256_mul_pd(d0, d0)));
      __m256d e1 = exp_pd(_mm256_mul_pd(vgamma, _mm256_mul_pd(d1, d1)));
      // T_j = exp(-gamma * (16*step*d_j + 64*step^2)).
      const __m256d tc = _mm256_set1_pd(16.0 * step);
      const __m256d tk = _mm256_set1_pd(64.0 * step * step);
      __m256d t0 = exp_pd(_mm256_mul_pd(
          vgamma, _mm256_fmadd_pd(tc, d0, tk)));
      __m256d t1 = exp_pd(_mm256_mul_pd(
          vgamma, _mm256_fmadd_pd(tc, d1, tk)));
      for (; j + 8 <= hi; j += 8) {
        _mm256_storeu_pd(out + j, _mm256_add_pd(_mm256_loadu_pd(out + j), e0));
        _mm256_storeu_pd(out + j + 4,
                         _mm256_add_pd(_mm256_loadu_pd(out + j + 4), e1));
        e0 = _mm256_mul_pd(e0, t0);
        e1 = _mm256_mul_pd(e1, t1);
        t0 = _mm256_mul_pd(t0, q8);
        t1 = _mm256_mul_pd(t1, q8);
      }
    }
    for (; j < hi; ++j) {
      const double d = (grid0 + static_cast<double>(j) * step) - x;
      out[j] += exp_taylor(-gamma * d * d);
    }
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum = std::fma(a[i], b[i], sum);
  return sum;
}

double squared_distance_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double sum = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    sum = std::fma(d, d, sum);
  }
  return sum;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{gaussian_kernel_sum_avx2,
                                 gaussian_grid_accumulate_avx2, dot_avx2,
                                 squared_distance_avx2};
  return table;
}

}  // namespace pf::simd::detail

#endif  // x86-64
