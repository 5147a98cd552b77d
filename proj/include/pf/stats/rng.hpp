#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pf/stats/samples.hpp"

namespace pf {

//! Random number generation contract, version "pf-rng-v1":
//!
//!   * Engine: std::mt19937_64 seeded through std::seed_seq with
//!     {seed_low32, seed_high32, stream}. Both the engine and seed_seq are
//!     fully specified by the C++ standard, so streams are identical on
//!     every conforming implementation.
//!   * Uniforms: u = ((engine() >> 11) + 1) * 2^-53, in (0, 1].
//!   * Gaussians: Box-Muller pair transform. Each pair of uniforms
//!     (u1, u2) yields r = sqrt(-2 ln u1), z0 = r cos(2 pi u2),
//!     z1 = r sin(2 pi u2); z0 is emitted first and z1 cached.
//!
//! Distinct stream ids give independent streams under one seed, so adding
//! or removing a consumer of one stream never perturbs the others. Outputs
//! are bit-reproducible for a fixed seed, stream, and build (the libm
//! log/cos/sin of the build participate in the values).
inline constexpr const char* kRngVersion = "pf-rng-v1";

//! Standard-normal stream (see kRngVersion for the exact contract).
class NormalSampler {
 public:
  NormalSampler(std::uint64_t seed, std::uint32_t stream);

  double next();
  std::vector<double> take(std::size_t n);

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

//! n standard-normal draws from stream 0 of `seed`. Deterministic.
Samples1d sample_standard_normal(std::size_t n, std::uint64_t seed);

}  // namespace pf
