#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

//! Runtime-dispatched CPU kernels.
//!
//! Every kernel has a portable scalar reference implementation and, on
//! x86-64, an AVX2+FMA variant. The best backend supported by the CPU is
//! selected once at startup; tests and callers may pin a specific backend
//! with force_backend() to compare implementations.
//!
//! Determinism contract: for a fixed backend, input, and build, each kernel
//! accumulates in a fixed order and returns bit-identical results across
//! runs and thread counts. Different backends may differ in the last few
//! ulps (distinct exp approximations and summation associativity); callers
//! must not rely on cross-backend bit equality.
namespace pf::simd {

enum class Backend { scalar, avx2 };

//! Human-readable backend name ("scalar", "avx2").
const char* backend_name(Backend b);

//! Backends usable on this machine (scalar is always available).
std::vector<Backend> available_backends();

//! Backend kernels currently dispatch to.
Backend active_backend();

//! Pin the active backend. Throws std::invalid_argument if unavailable.
//! Not safe to call concurrently with running kernels; intended for tests
//! and the PF_SIMD environment override (PF_SIMD=scalar|avx2, read once).
void force_backend(Backend b);

//! Restore automatic backend selection.
void reset_backend();

//! Sum of Gaussian kernel values: sum_i exp(-0.5 * ((center - xs[i]) * inv_bw)^2).
//! Inputs must be finite; inv_bw > 0. Accumulation is in index order
//! (vector lanes are combined in a fixed pattern).
double gaussian_kernel_sum(const double* xs, std::size_t n, double center,
                           double inv_bw);

//! Adds, for every sample x in xs and every grid index j whose node
//! g_j = grid0 + j * step lies within cutoff_radius / inv_bw of x,
//! exp(-0.5 * ((g_j - x) * inv_bw)^2) into out[j]. Nodes outside the cutoff
//! are skipped; their kernel values (< exp(-cutoff^2 / 2)) are treated as
//! zero. Grid nodes must satisfy step * inv_bw <= 1 (fine grids); callers
//! fall back to per-point evaluation otherwise. Uses a multiplicative
//! recurrence along the grid instead of per-node exp, which drifts by at
//! most a few ulps per thousand nodes; variants agree to ~1e-10 relative.
void gaussian_grid_accumulate(const double* xs, std::size_t n, double grid0,
                              double step, std::size_t m, double inv_bw,
                              double cutoff_radius, double* out);

//! Inner product sum_i a[i] * b[i]. Spans must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

//! Squared Euclidean distance sum_i (a[i] - b[i])^2. Equal lengths required.
double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace pf::simd
