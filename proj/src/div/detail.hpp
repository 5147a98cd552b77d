#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "pf/div/feature_set.hpp"

namespace pf::detail {

//! Indices of the rows of `s` in lexicographic row order. Accumulating
//! row-order-independent quantities in this order makes them exactly
//! invariant to input permutations; duplicate rows contribute identical
//! terms in identical slots regardless of how the sort breaks their tie.
inline std::vector<std::size_t> canonical_row_order(const FeatureSet& s) {
  std::vector<std::size_t> idx(s.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&s](std::size_t i, std::size_t j) {
    const auto ri = s.row(i);
    const auto rj = s.row(j);
    return std::lexicographical_compare(ri.begin(), ri.end(), rj.begin(),
                                        rj.end());
  });
  return idx;
}

}  // namespace pf::detail
