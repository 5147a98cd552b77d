#include "pf/div/kid.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "detail.hpp"
#include "pf/simd/simd.hpp"

namespace pf {
namespace {

double kernel_rows(const FeatureSet& a, std::size_t i, const FeatureSet& b,
                   std::size_t j) {
  const double t =
      pf::simd::dot(a.row(i), b.row(j)) / static_cast<double>(a.dim()) + 1.0;
  return t * t * t;
}

double kid_full(const FeatureSet& a, const FeatureSet& b,
                std::span<const std::size_t> ia,
                std::span<const std::size_t> ib, KidEstimator estimator) {
  const double n = static_cast<double>(ia.size());
  const double m = static_cast<double>(ib.size());
  double sum_aa = 0.0;
  for (std::size_t i = 0; i < ia.size(); ++i) {
    for (std::size_t j = i + 1; j < ia.size(); ++j) {
      sum_aa += kernel_rows(a, ia[i], a, ia[j]);
    }
  }
  double sum_bb = 0.0;
  for (std::size_t i = 0; i < ib.size(); ++i) {
    for (std::size_t j = i + 1; j < ib.size(); ++j) {
      sum_bb += kernel_rows(b, ib[i], b, ib[j]);
    }
  }
  double sum_ab = 0.0;
  for (std::size_t i = 0; i < ia.size(); ++i) {
    for (std::size_t j = 0; j < ib.size(); ++j) {
      sum_ab += kernel_rows(a, ia[i], b, ib[j]);
    }
  }
  if (estimator == KidEstimator::unbiased) {
    return 2.0 * sum_aa / (n * (n - 1.0)) + 2.0 * sum_bb / (m * (m - 1.0)) -
           2.0 * sum_ab / (n * m);
  }
  // Biased: diagonal kernel values are included in the self terms.
  double diag_aa = 0.0;
  for (std::size_t i : ia) diag_aa += kernel_rows(a, i, a, i);
  double diag_bb = 0.0;
  for (std::size_t i : ib) diag_bb += kernel_rows(b, i, b, i);
  return (2.0 * sum_aa + diag_aa) / (n * n) + (2.0 * sum_bb + diag_bb) / (m * m) -
         2.0 * sum_ab / (n * m);
}

// First `take` entries of a seeded partial Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> subset_indices(std::size_t n, std::size_t take,
                                        std::uint64_t seed,
                                        std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), stream};
  std::mt19937_64 engine(seq);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + engine() % (n - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(take);
  return idx;
}

}  // namespace

double polynomial_kernel(std::span<const double> x,
                         std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) {
    throw std::invalid_argument("polynomial_kernel: dimension mismatch");
  }
  const double t =
      pf::simd::dot(x, y) / static_cast<double>(x.size()) + 1.0;
  return t * t * t;
}

double kid(const FeatureSet& a, const FeatureSet& b,
           const std::optional<KidBlocks>& blocks, KidEstimator estimator) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("kid: feature dimension mismatch");
  }
  if (a.rows() < 2 || b.rows() < 2) {
    throw std::invalid_argument("kid: each set needs at least 2 rows");
  }
  if (!blocks.has_value()) {
    // Rows enter the kernel sums in lexicographic order, which makes the
    // plain estimator exactly invariant to row permutations of either set.
    const std::vector<std::size_t> ia = detail::canonical_row_order(a);
    const std::vector<std::size_t> ib = detail::canonical_row_order(b);
    return kid_full(a, b, ia, ib, estimator);
  }
  const KidBlocks& blk = *blocks;
  if (blk.subset_size < 2 || blk.subset_size > std::min(a.rows(), b.rows())) {
    throw std::invalid_argument(
        "kid: subset_size must be in [2, min(rows_a, rows_b)]");
  }
  if (blk.n_subsets == 0) {
    throw std::invalid_argument("kid: n_subsets must be >= 1");
  }
  double sum = 0.0;
  for (std::size_t s = 0; s < blk.n_subsets; ++s) {
    const auto ia = subset_indices(a.rows(), blk.subset_size, blk.seed,
                                   static_cast<std::uint32_t>(2 * s));
    const auto ib = subset_indices(b.rows(), blk.subset_size, blk.seed,
                                   static_cast<std::uint32_t>(2 * s + 1));
    sum += kid_full(a, b, ia, ib, estimator);
  }
  return sum / static_cast<double>(blk.n_subsets);
}

}  // namespace pf
