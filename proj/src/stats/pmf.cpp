#include "pf/stats/pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace pf {

DiscretePmf::DiscretePmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("DiscretePmf: empty alphabet");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("DiscretePmf: entry " + std::to_string(i) +
                                  " is negative or non-finite");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPmfSumTolerance) {
    throw std::invalid_argument("DiscretePmf: entries sum to " +
                                std::to_string(sum) + ", expected 1");
  }
}

std::vector<std::size_t> DiscretePmf::support(double threshold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > threshold) out.push_back(i);
  }
  return out;
}

}  // namespace pf
