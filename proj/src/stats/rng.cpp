#include "pf/stats/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pf {
namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream};
  return std::mt19937_64(seq);
}

// Uniform in (0, 1]: top 53 bits of the engine output, shifted into (0, 1].
double uniform_unit(std::mt19937_64& engine) {
  return static_cast<double>((engine() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

NormalSampler::NormalSampler(std::uint64_t seed, std::uint32_t stream)
    : engine_(make_engine(seed, stream)) {}

double NormalSampler::next() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = uniform_unit(engine_);
  const double u2 = uniform_unit(engine_);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

std::vector<double> NormalSampler::take(std::size_t n) {
  std::vector<double> out(n);
  for (double& x : out) x = next();
  return out;
}

Samples1d sample_standard_normal(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("sample_standard_normal: n must be >= 1");
  }
  NormalSampler sampler(seed, 0);
  return Samples1d(sampler.take(n), seed);
}

}  // namespace pf
