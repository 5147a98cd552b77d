#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pf/stats/pmf.hpp"

namespace pf {

//! Row-stochastic matrix: every row is a pmf over the column alphabet
//! (entries >= 0, each row summing to 1 within kPmfSumTolerance). Used both
//! for degradation channels (X -> Y) and reconstruction kernels (Y -> Xhat).
class StochasticMatrix {
 public:
  //! Validates shape and row stochasticity; throws std::invalid_argument.
  StochasticMatrix(std::size_t rows, std::size_t cols,
                   std::vector<double> data);

  static StochasticMatrix identity(std::size_t n);
  //! Every row equal to `row` (the channel ignores its input).
  static StochasticMatrix constant_rows(std::size_t rows,
                                        const DiscretePmf& row);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<double>& data() const { return data_; }

  //! Pushforward q(c) = sum_r p(r) * M[r, c]. Requires p.size() == rows().
  DiscretePmf push(const DiscretePmf& p) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

//! Reconstruction kernel p_{Xhat|Y}: rows indexed by the Y alphabet, columns
//! by the Xhat alphabet. The Xhat alphabet shares its first x_size() symbols
//! with the X alphabet; extra columns model off-support reconstructions.
using EstimatorKernel = StochasticMatrix;

//! Finite-alphabet restoration scenario: group prior p_A, per-group signal
//! laws p_{X|A}, and a degradation channel p_{Y|X}. The measurement laws
//! p_{Y|A} are derived by pushing each group law through the channel, so Y
//! depends on the group only through X (A -> X -> Y is a Markov chain), and
//! the derived laws satisfy that pushforward identity by construction.
class DiscreteScenario {
 public:
  //! Requires one signal law per group, all over the same X alphabet, with
  //! the channel's rows indexed by that alphabet.
  DiscreteScenario(DiscretePmf p_a, std::vector<DiscretePmf> p_x_given_a,
                   StochasticMatrix degradation);

  std::size_t n_groups() const { return p_x_given_a_.size(); }
  std::size_t x_size() const { return degradation_.rows(); }
  std::size_t y_size() const { return degradation_.cols(); }

  const DiscretePmf& p_a() const { return p_a_; }
  const DiscretePmf& p_x_given_a(std::size_t a) const {
    return p_x_given_a_[a];
  }
  const DiscretePmf& p_y_given_a(std::size_t a) const {
    return p_y_given_a_[a];
  }
  const StochasticMatrix& degradation() const { return degradation_; }

  //! Pooled signal law p_X = sum_a p_A(a) p_{X|A}(.|a).
  DiscretePmf pooled_x() const;

 private:
  DiscretePmf p_a_;
  std::vector<DiscretePmf> p_x_given_a_;
  StochasticMatrix degradation_;
  std::vector<DiscretePmf> p_y_given_a_;
};

//! Per-group reconstruction laws p_{Xhat|A}(.|a) = sum_y p_{Y|A}(y|a)
//! kernel[y, .], computed exactly. Requires kernel.rows() == y_size() and
//! kernel.cols() >= x_size().
std::vector<DiscretePmf> push_forward(const DiscreteScenario& scenario,
                                      const EstimatorKernel& kernel);

struct ScenarioSizes {
  std::size_t n_groups;
  std::size_t x_alphabet;
  std::size_t y_alphabet;
};

struct RandomScenarioOptions {
  ScenarioSizes sizes;
  //! Partition the X alphabet so group supports are pairwise disjoint
  //! (requires x_alphabet >= n_groups).
  bool disjoint_supports = false;
  //! Identity degradation channel (requires y_alphabet == x_alphabet).
  bool noiseless = false;
  //! Give every degradation row full support by mixing 20% uniform mass
  //! into it. With disjoint_supports this yields scenarios whose group
  //! supports are disjoint in X but fully overlapping in Y.
  bool mixing_degradation = false;
};

//! Seeded, deterministic scenario generator. Alphabet sizes are capped at
//! 64; sizes must be >= 1. Throws std::invalid_argument on bad sizes or
//! inconsistent flags.
DiscreteScenario random_scenario(std::uint64_t seed,
                                 const RandomScenarioOptions& options);

//! Seeded, deterministic row-stochastic kernel: each row is drawn from a
//! flat Dirichlet with probability 0.6, and is a random point mass
//! otherwise (exercising sparse and dense reconstructions alike).
EstimatorKernel random_kernel(std::uint64_t seed, std::size_t rows,
                              std::size_t cols);

}  // namespace pf
