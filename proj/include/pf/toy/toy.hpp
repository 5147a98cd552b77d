#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pf/div/quadrature.hpp"

namespace pf {

//! Synthetic Gaussian restoration benchmark with closed-form structure.
//!
//! The generating process is X ~ N(0,1), noise N ~ N(0,1), measurement
//! Y = X + N, and a group attribute A = 1{X >= 1}, so group 0 is a large
//! majority (P(A=0) = Phi(1) ~ 0.8413) and the group-conditional signal
//! laws are standard normals truncated at 1. Three classical estimators of
//! X from Y are evaluated per group:
//!
//!   * mmse:      Xhat = Y/2, the conditional mean (lowest MSE).
//!   * posterior: Xhat = Y/2 + W with auxiliary W ~ N(0, 1/2), a sample
//!                from the posterior p_{X|Y}.
//!   * mse_pi:    Xhat = Y/sqrt(2), the lowest-MSE estimator whose output
//!                marginal equals the signal marginal (perfect PI).
//!
//! Per estimator and group the benchmark reports GPI_TV — the total
//! variation between the group's closed-form truncated-normal signal law
//! and a Gaussian KDE of the group's reconstructions, integrated by
//! composite quadrature split at the truncation point — and GPI_W1, the
//! empirical 1-Wasserstein distance between the group's ground-truth
//! samples and its reconstructions.
//!
//! Sampling follows the pf-rng-v1 contract with streams X = 0, N = 1, and
//! W = 2 of the configured seed, so results are bit-reproducible for a
//! fixed (seed, n_samples, build), and toggling estimators on or off never
//! perturbs the other estimators' draws.

enum class ToyEstimator { mmse, posterior, mse_pi };

//! Stable name ("mmse", "posterior", "mse_pi"); used as the report key.
std::string_view toy_estimator_name(ToyEstimator e);

//! Inverse of toy_estimator_name. Throws std::invalid_argument on unknown
//! names.
ToyEstimator toy_estimator_from_name(std::string_view name);

//! Conditional mean E[X|Y=y] = y/2.
double estimator_mmse(double y);

//! Posterior sample y/2 + w; the caller supplies w ~ N(0, 1/2).
double estimator_posterior(double y, double w);

//! Marginal-preserving linear estimator y/sqrt(2).
double estimator_mse_pi(double y);

//! Quadrature for the GPI_TV integrals: [-12, 12] split at the truncation
//! point 1.0, sized so the Richardson error estimate passes the default
//! tolerance for the KDE bandwidths arising at n >= 1000.
QuadratureSpec default_toy_quadrature();

struct ToyConfig {
  //! Total number of (X, N) draws; groups split it by A. At least 1000,
  //! so both group KDEs have enough samples to be meaningful.
  std::size_t n_samples = 200000;
  std::uint64_t seed = 0;
  //! Multiplier on Scott's-rule bandwidth for the reconstruction KDEs.
  double bw_adjust = 2.0;
  QuadratureSpec quadrature = default_toy_quadrature();
  //! Estimators to evaluate, reported in this order (duplicates ignored).
  std::vector<ToyEstimator> estimators = {
      ToyEstimator::mmse, ToyEstimator::posterior, ToyEstimator::mse_pi};
};

struct ToyGroupResult {
  double gpi_tv = 0.0;
  double gpi_w1 = 0.0;
};

struct ToyEstimatorResult {
  ToyEstimator estimator;
  //! Indexed by the group attribute a (0: X < 1, 1: X >= 1).
  std::array<ToyGroupResult, 2> groups;
};

struct ToyResult {
  //! One entry per configured estimator, in configuration order.
  std::vector<ToyEstimatorResult> estimators;
  //! Empirical P(A = 0).
  double p_a0 = 0.0;
  //! Per-group sample counts; they sum to n_samples.
  std::array<std::size_t, 2> group_counts{};
};

//! Runs the benchmark. Throws std::invalid_argument on an invalid config
//! and std::runtime_error if a group receives fewer than 100 samples
//! (practically unreachable at n_samples >= 1000).
ToyResult run_toy(const ToyConfig& config);

}  // namespace pf
