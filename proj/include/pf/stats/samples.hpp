#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pf {

//! One-dimensional empirical sample set. Values are validated once at
//! construction (nonempty, all finite) and immutable afterwards. When the
//! set was produced by a seeded generator, the seed is carried along for
//! provenance.
class Samples1d {
 public:
  explicit Samples1d(std::vector<double> values,
                     std::optional<std::uint64_t> seed = std::nullopt);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::optional<std::uint64_t> seed() const { return seed_; }

 private:
  std::vector<double> values_;
  std::optional<std::uint64_t> seed_;
};

//! Sample mean.
double mean(std::span<const double> xs);

//! Unbiased sample variance (n-1 denominator). Requires n >= 2.
double variance(std::span<const double> xs);

}  // namespace pf
