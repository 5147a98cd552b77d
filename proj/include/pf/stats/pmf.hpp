#pragma once

#include <cstddef>
#include <vector>

namespace pf {

//! Tolerance on the total mass of a pmf at construction. Probabilities are
//! never silently renormalized; inputs must already sum to 1 within this.
inline constexpr double kPmfSumTolerance = 1e-12;

//! Probability threshold below which an entry is treated as outside the
//! support.
inline constexpr double kSupportThreshold = 1e-15;

//! Probability mass function over a finite indexed alphabet.
class DiscretePmf {
 public:
  //! Validates that every entry is >= 0 and finite and the total mass is 1
  //! within kPmfSumTolerance; throws std::invalid_argument otherwise.
  explicit DiscretePmf(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  //! Indices carrying probability mass above `threshold`.
  std::vector<std::size_t> support(double threshold = kSupportThreshold) const;

 private:
  std::vector<double> probs_;
};

}  // namespace pf
