#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pf {

//! Row-major matrix of n feature vectors of dimension d. Entries are
//! validated finite at construction; immutable afterwards.
class FeatureSet {
 public:
  FeatureSet(std::size_t rows, std::size_t dim, std::vector<double> data);

  static FeatureSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t dim_;
  std::vector<double> data_;
};

}  // namespace pf
