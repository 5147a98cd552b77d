#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pf/simd/simd.hpp"

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed, double lo = -10.0,
                               double hi = 10.0) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(eng);
  return v;
}

struct BackendGuard {
  ~BackendGuard() { pf::simd::reset_backend(); }
};

double gaussian_sum_reference(const std::vector<double>& xs, double center,
                              double inv_bw) {
  double sum = 0.0;
  for (double x : xs) {
    const double u = (center - x) * inv_bw;
    sum += std::exp(-0.5 * u * u);
  }
  return sum;
}

}  // namespace

TEST_CASE("backend inventory") {
  const auto backends = pf::simd::available_backends();
  REQUIRE(!backends.empty());
  CHECK(backends.front() == pf::simd::Backend::scalar);
  CHECK(pf::simd::backend_name(pf::simd::Backend::scalar) ==
        std::string("scalar"));
  CHECK(pf::simd::backend_name(pf::simd::Backend::avx2) == std::string("avx2"));
  // The active backend must be one of the available ones.
  CHECK(std::find(backends.begin(), backends.end(),
                  pf::simd::active_backend()) != backends.end());
}

TEST_CASE("force_backend round trip") {
  BackendGuard guard;
  pf::simd::force_backend(pf::simd::Backend::scalar);
  CHECK(pf::simd::active_backend() == pf::simd::Backend::scalar);
  pf::simd::reset_backend();
  const auto backends = pf::simd::available_backends();
  CHECK(std::find(backends.begin(), backends.end(),
                  pf::simd::active_backend()) != backends.end());
}

TEST_CASE("gaussian_kernel_sum equivalence across backends") {
  BackendGuard guard;
  for (unsigned seed = 1; seed <= 5; ++seed) {
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u,
                          100u, 1001u}) {
      const auto xs = random_vec(n, seed);
      const double center = 0.3 * seed;
      const double inv_bw = 1.0 / (0.1 * seed);
      pf::simd::force_backend(pf::simd::Backend::scalar);
      const double ref = pf::simd::gaussian_kernel_sum(xs.data(), n, center, inv_bw);
      for (pf::simd::Backend b : pf::simd::available_backends()) {
        pf::simd::force_backend(b);
        const double got = pf::simd::gaussian_kernel_sum(xs.data(), n, center, inv_bw);
        CHECK(std::abs(got - ref) <= 1e-12 * (1.0 + std::abs(ref)));
      }
    }
  }
}

TEST_CASE("gaussian_kernel_sum exact cases") {
  BackendGuard guard;
  for (pf::simd::Backend b : pf::simd::available_backends()) {
    pf::simd::force_backend(b);
    CAPTURE(pf::simd::backend_name(b));
    // Empty input.
    CHECK(pf::simd::gaussian_kernel_sum(nullptr, 0, 0.0, 1.0) == 0.0);
    // All samples at the center: every kernel value is exactly exp(0) = 1.
    const std::vector<double> at_center(13, 2.5);
    CHECK(pf::simd::gaussian_kernel_sum(at_center.data(), at_center.size(), 2.5,
                                        3.0) == 13.0);
    // Far-away samples contribute (numerically) nothing.
    const std::vector<double> far(7, 1e6);
    CHECK(pf::simd::gaussian_kernel_sum(far.data(), far.size(), 0.0, 1.0) <=
          1e-300);
  }
}

TEST_CASE("gaussian_kernel_sum matches libm reference closely") {
  BackendGuard guard;
  const auto xs = random_vec(4096, 99, -5.0, 5.0);
  const double inv_bw = 1.0 / 0.25;
  for (pf::simd::Backend b : pf::simd::available_backends()) {
    pf::simd::force_backend(b);
    for (double center : {-4.0, -1.0, 0.0, 0.5, 3.75}) {
      const double ref = gaussian_sum_reference(xs, center, inv_bw);
      const double got =
          pf::simd::gaussian_kernel_sum(xs.data(), xs.size(), center, inv_bw);
      CHECK(std::abs(got - ref) <= 1e-12 * (1.0 + std::abs(ref)));
    }
  }
}

TEST_CASE("gaussian_grid_accumulate matches per-node direct evaluation") {
  BackendGuard guard;
  std::vector<double> xs = random_vec(500, 21, -2.0, 2.0);
  std::sort(xs.begin(), xs.end());
  const double grid0 = -3.0, step = 0.01, inv_bw = 1.0 / 0.05;
  const std::size_t m = 601;
  const double cutoff = 9.5;
  const double radius = cutoff / inv_bw;
  // Direct oracle: per node, sum kernels over samples inside the cutoff.
  std::vector<double> want(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const double g = grid0 + static_cast<double>(j) * step;
    for (double x : xs) {
      if (std::abs(g - x) <= radius) {
        const double u = (g - x) * inv_bw;
        want[j] += std::exp(-0.5 * u * u);
      }
    }
  }
  for (pf::simd::Backend b : pf::simd::available_backends()) {
    pf::simd::force_backend(b);
    CAPTURE(pf::simd::backend_name(b));
    std::vector<double> got(m, 0.0);
    pf::simd::gaussian_grid_accumulate(xs.data(), xs.size(), grid0, step, m,
                                       inv_bw, cutoff, got.data());
    double max_err = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      max_err = std::max(max_err,
                         std::abs(got[j] - want[j]) / (1.0 + std::abs(want[j])));
    }
    CHECK(max_err <= 1e-10);
  }
}

TEST_CASE("gaussian_grid_accumulate backend equivalence and accumulation") {
  BackendGuard guard;
  std::vector<double> xs = random_vec(2000, 33, -1.0, 3.0);
  std::sort(xs.begin(), xs.end());
  const double grid0 = -2.0, step = 2e-4, inv_bw = 1.0 / 0.03;
  const std::size_t m = 30001;
  std::vector<double> base(m);
  for (std::size_t j = 0; j < m; ++j) base[j] = 0.125 * static_cast<double>(j % 7);

  std::vector<std::vector<double>> results;
  for (pf::simd::Backend b : pf::simd::available_backends()) {
    pf::simd::force_backend(b);
    std::vector<double> buf = base;
    pf::simd::gaussian_grid_accumulate(xs.data(), xs.size(), grid0, step, m,
                                       inv_bw, 9.5, buf.data());
    results.push_back(std::move(buf));
  }
  for (std::size_t r = 1; r < results.size(); ++r) {
    double max_err = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      max_err = std::max(max_err, std::abs(results[r][j] - results[0][j]) /
                                      (1.0 + std::abs(results[0][j])));
    }
    CHECK(max_err <= 1e-10);
  }
  // Far nodes must be untouched: the base value survives exactly.
  CHECK(results[0][0] == base[0]);
  CHECK(results[0][m - 1] == base[m - 1]);
}

TEST_CASE("gaussian_grid_accumulate rejects bad parameters") {
  const std::vector<double> xs{0.0};
  std::vector<double> out(8, 0.0);
  CHECK_THROWS_AS(pf::simd::gaussian_grid_accumulate(xs.data(), 1, 0.0, 0.5, 8,
                                                     4.0, 9.5, out.data()),
                  std::invalid_argument);
  CHECK_THROWS_AS(pf::simd::gaussian_grid_accumulate(xs.data(), 1, 0.0, -0.1, 8,
                                                     1.0, 9.5, out.data()),
                  std::invalid_argument);
  CHECK_THROWS_AS(pf::simd::gaussian_grid_accumulate(xs.data(), 1, 0.0, 0.1, 8,
                                                     -1.0, 9.5, out.data()),
                  std::invalid_argument);
}

TEST_CASE("dot and squared_distance equivalence across backends") {
  BackendGuard guard;
  for (unsigned seed = 10; seed <= 14; ++seed) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 31u, 64u, 257u}) {
      const auto a = random_vec(n, seed);
      const auto b = random_vec(n, seed + 1000);
      double abs_scale = 1.0;
      for (std::size_t i = 0; i < n; ++i) abs_scale += std::abs(a[i] * b[i]);
      pf::simd::force_backend(pf::simd::Backend::scalar);
      const double dot_ref = pf::simd::dot(a, b);
      const double sq_ref = pf::simd::squared_distance(a, b);
      for (pf::simd::Backend back : pf::simd::available_backends()) {
        pf::simd::force_backend(back);
        CHECK(std::abs(pf::simd::dot(a, b) - dot_ref) <= 1e-12 * abs_scale);
        CHECK(std::abs(pf::simd::squared_distance(a, b) - sq_ref) <=
              1e-12 * (1.0 + sq_ref));
      }
    }
  }
}

TEST_CASE("kernels are bit-deterministic for a fixed backend") {
  BackendGuard guard;
  const auto xs = random_vec(1234, 7);
  const auto ys = random_vec(1234, 8);
  for (pf::simd::Backend b : pf::simd::available_backends()) {
    pf::simd::force_backend(b);
    const double g1 = pf::simd::gaussian_kernel_sum(xs.data(), xs.size(), 0.1, 2.0);
    const double g2 = pf::simd::gaussian_kernel_sum(xs.data(), xs.size(), 0.1, 2.0);
    CHECK(g1 == g2);
    CHECK(pf::simd::dot(xs, ys) == pf::simd::dot(xs, ys));
    CHECK(pf::simd::squared_distance(xs, ys) ==
          pf::simd::squared_distance(xs, ys));
  }
}

TEST_CASE("length mismatch is rejected") {
  const auto a = random_vec(4, 1);
  const auto b = random_vec(5, 2);
  CHECK_THROWS_AS((void)pf::simd::dot(a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)pf::simd::squared_distance(a, b), std::invalid_argument);
}
