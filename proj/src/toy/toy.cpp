#include "pf/toy/toy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "pf/div/tv.hpp"
#include "pf/div/wasserstein.hpp"
#include "pf/stats/density.hpp"
#include "pf/stats/kde.hpp"
#include "pf/stats/rng.hpp"
#include "pf/stats/samples.hpp"

namespace pf {

namespace {

constexpr std::uint32_t kStreamX = 0;
constexpr std::uint32_t kStreamN = 1;
constexpr std::uint32_t kStreamW = 2;
constexpr double kCut = 1.0;
constexpr std::size_t kMinGroupSamples = 100;

std::vector<ToyEstimator> dedupe(const std::vector<ToyEstimator>& estimators) {
  std::vector<ToyEstimator> unique;
  for (ToyEstimator e : estimators) {
    if (std::find(unique.begin(), unique.end(), e) == unique.end()) {
      unique.push_back(e);
    }
  }
  return unique;
}

}  // namespace

std::string_view toy_estimator_name(ToyEstimator e) {
  switch (e) {
    case ToyEstimator::mmse:
      return "mmse";
    case ToyEstimator::posterior:
      return "posterior";
    case ToyEstimator::mse_pi:
      return "mse_pi";
  }
  throw std::logic_error("toy_estimator_name: unhandled estimator");
}

ToyEstimator toy_estimator_from_name(std::string_view name) {
  if (name == "mmse") return ToyEstimator::mmse;
  if (name == "posterior") return ToyEstimator::posterior;
  if (name == "mse_pi") return ToyEstimator::mse_pi;
  throw std::invalid_argument("unknown estimator name: " + std::string(name));
}

double estimator_mmse(double y) { return 0.5 * y; }

double estimator_posterior(double y, double w) { return 0.5 * y + w; }

double estimator_mse_pi(double y) { return y / std::sqrt(2.0); }

QuadratureSpec default_toy_quadrature() {
  QuadratureSpec spec;
  spec.breakpoints = {kCut};
  spec.points_per_segment = 50000;
  return spec;
}

ToyResult run_toy(const ToyConfig& config) {
  if (config.n_samples < 1000) {
    throw std::invalid_argument(
        "run_toy: n_samples must be >= 1000 for stable GPI estimation");
  }
  if (!(config.bw_adjust > 0.0)) {
    throw std::invalid_argument("run_toy: bw_adjust must be > 0");
  }
  const std::size_t n = config.n_samples;

  const std::vector<double> x = NormalSampler(config.seed, kStreamX).take(n);
  const std::vector<double> noise =
      NormalSampler(config.seed, kStreamN).take(n);

  // Partition ground truth and measurements by A = 1{X >= 1}, keeping
  // sample order within each group.
  std::array<std::vector<double>, 2> truth;
  std::array<std::vector<double>, 2> measured;
  for (std::size_t i = 0; i < n; ++i) {
    const int a = x[i] >= kCut ? 1 : 0;
    truth[a].push_back(x[i]);
    measured[a].push_back(x[i] + noise[i]);
  }
  for (int a : {0, 1}) {
    if (truth[a].size() < kMinGroupSamples) {
      throw std::runtime_error("run_toy: group " + std::to_string(a) +
                               " received only " +
                               std::to_string(truth[a].size()) +
                               " samples; increase n_samples");
    }
  }

  const std::vector<ToyEstimator> estimators = dedupe(config.estimators);

  // Auxiliary posterior noise W ~ N(0, 1/2) from its own stream, paired to
  // samples by index, so toggling estimators never reshuffles any stream.
  std::array<std::vector<double>, 2> aux;
  if (std::find(estimators.begin(), estimators.end(),
                ToyEstimator::posterior) != estimators.end()) {
    NormalSampler ws(config.seed, kStreamW);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = ws.next() / std::sqrt(2.0);
      aux[x[i] >= kCut ? 1 : 0].push_back(w);
    }
  }

  ToyResult result;
  result.group_counts = {truth[0].size(), truth[1].size()};
  result.p_a0 =
      static_cast<double>(truth[0].size()) / static_cast<double>(n);

  for (ToyEstimator e : estimators) {
    ToyEstimatorResult cell{e, {}};
    for (int a : {0, 1}) {
      const std::vector<double>& ys = measured[a];
      std::vector<double> recon(ys.size());
      switch (e) {
        case ToyEstimator::mmse:
          for (std::size_t i = 0; i < ys.size(); ++i) {
            recon[i] = estimator_mmse(ys[i]);
          }
          break;
        case ToyEstimator::posterior:
          for (std::size_t i = 0; i < ys.size(); ++i) {
            recon[i] = estimator_posterior(ys[i], aux[a][i]);
          }
          break;
        case ToyEstimator::mse_pi:
          for (std::size_t i = 0; i < ys.size(); ++i) {
            recon[i] = estimator_mse_pi(ys[i]);
          }
          break;
      }

      cell.groups[a].gpi_w1 = wasserstein1_empirical(truth[a], recon);

      const TruncatedNormalDensity signal(
          a == 0 ? TruncationSide::below_cut : TruncationSide::above_cut,
          kCut);
      const KdeDensity kde =
          kde_fit(Samples1d(std::move(recon)), config.bw_adjust);
      cell.groups[a].gpi_tv = tv_continuous_1d(signal, kde, config.quadrature);
    }
    result.estimators.push_back(cell);
  }
  return result;
}

}  // namespace pf
