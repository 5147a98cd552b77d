#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pf::detail {

//! Re-pin the largest entry so the values sum to 1 exactly enough for the
//! DiscretePmf validator. Inputs already summing to 1 within 1e-13 are
//! returned bitwise untouched, so exact pushforwards stay exact; otherwise
//! the perturbation is bounded by the input's distance from unit mass (a
//! few ulps for derived quantities), lands on an entry >= 1/n, and never
//! moves an entry across the support threshold.
inline std::vector<double> pin_to_unit_sum(std::vector<double> w) {
  double sum = 0.0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sum += w[i];
    if (w[i] > w[largest]) largest = i;
  }
  if (sum > 1.0 - 1e-13 && sum < 1.0 + 1e-13) return w;
  double rest = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != largest) rest += w[i];
  }
  w[largest] = 1.0 - rest;
  return w;
}

}  // namespace pf::detail
