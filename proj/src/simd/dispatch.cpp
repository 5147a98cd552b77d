#include "pf/simd/simd.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernel_table.hpp"

namespace pf::simd {
namespace {

bool cpu_has_avx2() {
#if defined(PF_SIMD_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_table();
    case Backend::avx2:
#if defined(PF_SIMD_HAVE_AVX2)
      if (cpu_has_avx2()) return &detail::avx2_table();
#endif
      return nullptr;
  }
  return nullptr;
}

struct Dispatch {
  const detail::KernelTable* table;
  Backend backend;
};

Dispatch detect() {
  if (const char* env = std::getenv("PF_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return {&detail::scalar_table(), Backend::scalar};
    if (want == "avx2") {
      if (const detail::KernelTable* t = table_for(Backend::avx2)) {
        return {t, Backend::avx2};
      }
      throw std::runtime_error("PF_SIMD=avx2 requested but AVX2 is unavailable");
    }
    throw std::runtime_error("unrecognized PF_SIMD value: " + want);
  }
  if (const detail::KernelTable* t = table_for(Backend::avx2)) {
    return {t, Backend::avx2};
  }
  return {&detail::scalar_table(), Backend::scalar};
}

Dispatch& active() {
  static Dispatch d = detect();
  return d;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (cpu_has_avx2()) out.push_back(Backend::avx2);
  return out;
}

Backend active_backend() { return active().backend; }

void force_backend(Backend b) {
  const detail::KernelTable* t = table_for(b);
  if (t == nullptr) {
    throw std::invalid_argument(std::string("backend unavailable: ") +
                                backend_name(b));
  }
  active() = {t, b};
}

void reset_backend() { active() = detect(); }

double gaussian_kernel_sum(const double* xs, std::size_t n, double center,
                           double inv_bw) {
  return active().table->gaussian_kernel_sum(xs, n, center, inv_bw);
}

void gaussian_grid_accumulate(const double* xs, std::size_t n, double grid0,
                              double step, std::size_t m, double inv_bw,
                              double cutoff_radius, double* out) {
  if (!(step > 0.0) || !(inv_bw > 0.0) || !(cutoff_radius > 0.0)) {
    throw std::invalid_argument(
        "gaussian_grid_accumulate: step, inv_bw, cutoff_radius must be > 0");
  }
  if (step * inv_bw > 1.0) {
    throw std::invalid_argument(
        "gaussian_grid_accumulate: grid step exceeds bandwidth");
  }
  active().table->gaussian_grid_accumulate(xs, n, grid0, step, m, inv_bw,
                                           cutoff_radius, out);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  return active().table->dot(a.data(), b.data(), a.size());
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("squared_distance: length mismatch");
  }
  return active().table->squared_distance(a.data(), b.data(), a.size());
}

}  // namespace pf::simd
