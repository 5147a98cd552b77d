#include "pf/theorems/scenario.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "detail.hpp"

namespace pf {
namespace {

using detail::pin_to_unit_sum;

constexpr std::size_t kMaxAlphabet = 64;

//! Flat Dirichlet draw via normalized exponentials, pinned to unit sum.
std::vector<double> dirichlet(std::mt19937_64& eng, std::size_t n) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = expo(eng);
    total += x;
  }
  for (double& x : w) x /= total;
  return pin_to_unit_sum(std::move(w));
}

}  // namespace

StochasticMatrix::StochasticMatrix(std::size_t rows, std::size_t cols,
                                   std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("StochasticMatrix: empty shape");
  }
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("StochasticMatrix: data size " +
                                std::to_string(data_.size()) +
                                " does not match shape");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const double v = data_[r * cols_ + c];
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("StochasticMatrix: row " +
                                    std::to_string(r) +
                                    " has a negative or non-finite entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kPmfSumTolerance) {
      throw std::invalid_argument("StochasticMatrix: row " +
                                  std::to_string(r) + " sums to " +
                                  std::to_string(sum));
    }
  }
}

StochasticMatrix StochasticMatrix::identity(std::size_t n) {
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1.0;
  return StochasticMatrix(n, n, std::move(data));
}

StochasticMatrix StochasticMatrix::constant_rows(std::size_t rows,
                                                 const DiscretePmf& row) {
  std::vector<double> data(rows * row.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      data[r * row.size() + c] = row[c];
    }
  }
  return StochasticMatrix(rows, row.size(), std::move(data));
}

DiscretePmf StochasticMatrix::push(const DiscretePmf& p) const {
  if (p.size() != rows_) {
    throw std::invalid_argument(
        "StochasticMatrix::push: pmf size does not match row count");
  }
  std::vector<double> q(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const double pr = p[r];
    if (pr == 0.0) continue;
    for (std::size_t c = 0; c < cols_; ++c) q[c] += pr * data_[r * cols_ + c];
  }
  // Rounding can leave the sum a few ulps off or a hair negative; pin the
  // total without renormalizing so the pmf validator accepts it.
  return DiscretePmf(pin_to_unit_sum(std::move(q)));
}

DiscreteScenario::DiscreteScenario(DiscretePmf p_a,
                                   std::vector<DiscretePmf> p_x_given_a,
                                   StochasticMatrix degradation)
    : p_a_(std::move(p_a)),
      p_x_given_a_(std::move(p_x_given_a)),
      degradation_(std::move(degradation)) {
  if (p_a_.size() != p_x_given_a_.size()) {
    throw std::invalid_argument(
        "DiscreteScenario: need exactly one signal law per group");
  }
  for (const auto& law : p_x_given_a_) {
    if (law.size() != degradation_.rows()) {
      throw std::invalid_argument(
          "DiscreteScenario: signal law alphabet does not match the "
          "degradation channel");
    }
  }
  p_y_given_a_.reserve(p_x_given_a_.size());
  for (const auto& law : p_x_given_a_) {
    p_y_given_a_.push_back(degradation_.push(law));
  }
}

DiscretePmf DiscreteScenario::pooled_x() const {
  std::vector<double> pooled(x_size(), 0.0);
  for (std::size_t a = 0; a < n_groups(); ++a) {
    const double pa = p_a_[a];
    for (std::size_t x = 0; x < x_size(); ++x) {
      pooled[x] += pa * p_x_given_a_[a][x];
    }
  }
  return DiscretePmf(pin_to_unit_sum(std::move(pooled)));
}

std::vector<DiscretePmf> push_forward(const DiscreteScenario& scenario,
                                      const EstimatorKernel& kernel) {
  if (kernel.rows() != scenario.y_size()) {
    throw std::invalid_argument(
        "push_forward: kernel rows do not match the Y alphabet");
  }
  if (kernel.cols() < scenario.x_size()) {
    throw std::invalid_argument(
        "push_forward: kernel columns must cover the X alphabet");
  }
  std::vector<DiscretePmf> out;
  out.reserve(scenario.n_groups());
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    out.push_back(kernel.push(scenario.p_y_given_a(a)));
  }
  return out;
}

DiscreteScenario random_scenario(std::uint64_t seed,
                                 const RandomScenarioOptions& options) {
  const auto [n_groups, nx, ny] = options.sizes;
  if (n_groups < 1 || nx < 1 || ny < 1) {
    throw std::invalid_argument("random_scenario: sizes must be >= 1");
  }
  if (n_groups > kMaxAlphabet || nx > kMaxAlphabet || ny > kMaxAlphabet) {
    throw std::invalid_argument("random_scenario: alphabet cap is 64");
  }
  if (options.disjoint_supports && nx < n_groups) {
    throw std::invalid_argument(
        "random_scenario: disjoint supports need x_alphabet >= n_groups");
  }
  if (options.noiseless && ny != nx) {
    throw std::invalid_argument(
        "random_scenario: noiseless needs y_alphabet == x_alphabet");
  }
  std::mt19937_64 eng(seed);

  // Group prior: Dirichlet mixed with uniform so every group has mass.
  auto prior = dirichlet(eng, n_groups);
  for (double& p : prior) {
    p = 0.9 * p + 0.1 / static_cast<double>(n_groups);
  }
  DiscretePmf p_a(pin_to_unit_sum(std::move(prior)));

  // Per-group signal laws.
  std::vector<DiscretePmf> laws;
  laws.reserve(n_groups);
  if (options.disjoint_supports) {
    // Partition the alphabet into contiguous blocks, one per group.
    const std::size_t base = nx / n_groups;
    const std::size_t extra = nx % n_groups;
    std::size_t start = 0;
    for (std::size_t a = 0; a < n_groups; ++a) {
      const std::size_t len = base + (a < extra ? 1 : 0);
      auto block = dirichlet(eng, len);
      std::vector<double> law(nx, 0.0);
      for (std::size_t i = 0; i < len; ++i) law[start + i] = block[i];
      laws.emplace_back(std::move(law));
      start += len;
    }
  } else {
    for (std::size_t a = 0; a < n_groups; ++a) {
      laws.emplace_back(dirichlet(eng, nx));
    }
  }

  // Degradation channel.
  std::vector<double> channel(nx * ny, 0.0);
  if (options.noiseless) {
    for (std::size_t x = 0; x < nx; ++x) channel[x * ny + x] = 1.0;
  } else {
    for (std::size_t x = 0; x < nx; ++x) {
      auto row = dirichlet(eng, ny);
      if (options.mixing_degradation) {
        for (double& v : row) {
          v = 0.8 * v + 0.2 / static_cast<double>(ny);
        }
        row = pin_to_unit_sum(std::move(row));
      }
      for (std::size_t y = 0; y < ny; ++y) channel[x * ny + y] = row[y];
    }
  }
  return DiscreteScenario(std::move(p_a), std::move(laws),
                          StochasticMatrix(nx, ny, std::move(channel)));
}

EstimatorKernel random_kernel(std::uint64_t seed, std::size_t rows,
                              std::size_t cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("random_kernel: shape must be >= 1 x 1");
  }
  if (rows > kMaxAlphabet || cols > kMaxAlphabet) {
    throw std::invalid_argument("random_kernel: alphabet cap is 64");
  }
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, cols - 1);
  std::vector<double> data(rows * cols, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (unif(eng) < 0.6) {
      auto row = dirichlet(eng, cols);
      for (std::size_t c = 0; c < cols; ++c) data[r * cols + c] = row[c];
    } else {
      data[r * cols + pick(eng)] = 1.0;
    }
  }
  return EstimatorKernel(rows, cols, std::move(data));
}

}  // namespace pf
