#include "pf/div/feature_set.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace pf {

FeatureSet::FeatureSet(std::size_t rows, std::size_t dim,
                       std::vector<double> data)
    : rows_(rows), dim_(dim), data_(std::move(data)) {
  if (rows_ == 0 || dim_ == 0) {
    throw std::invalid_argument("FeatureSet: rows and dim must be >= 1");
  }
  if (data_.size() != rows_ * dim_) {
    throw std::invalid_argument("FeatureSet: data size " +
                                std::to_string(data_.size()) +
                                " does not match rows*dim");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw std::invalid_argument(
          "FeatureSet: non-finite entry at row " + std::to_string(i / dim_) +
          ", column " + std::to_string(i % dim_));
    }
  }
}

FeatureSet FeatureSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) {
    throw std::invalid_argument("FeatureSet: no rows");
  }
  const std::size_t dim = rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw std::invalid_argument("FeatureSet: ragged rows");
    }
    data.insert(data.end(), r.begin(), r.end());
  }
  return FeatureSet(rows.size(), dim, std::move(data));
}

}  // namespace pf
