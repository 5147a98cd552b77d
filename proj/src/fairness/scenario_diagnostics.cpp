#include "pf/fairness/scenario_diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pf {
namespace {

std::vector<std::vector<std::size_t>> group_supports(
    const DiscreteScenario& scenario) {
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(scenario.n_groups());
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    supports.push_back(scenario.p_x_given_a(a).support());
  }
  return supports;
}

//! Pooled mixture of per-group laws, accumulated in group order. Extended
//! reconstruction alphabets are handled by the laws' own sizes.
std::vector<double> pooled_law(const DiscreteScenario& scenario,
                               const std::vector<DiscretePmf>& laws) {
  std::vector<double> pooled(laws.front().size(), 0.0);
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    for (std::size_t x = 0; x < laws[a].size(); ++x) {
      pooled[x] += scenario.p_a()[a] * laws[a][x];
    }
  }
  return pooled;
}

double membership_mass(const std::vector<double>& law,
                       const std::vector<std::size_t>& support) {
  double mass = 0.0;
  for (std::size_t x : support) {
    if (x < law.size()) mass += law[x];
  }
  return mass;
}

}  // namespace

double rdp_gap(const DiscreteScenario& scenario,
               const EstimatorKernel& kernel) {
  const auto recon = push_forward(scenario, kernel);
  const auto supports = group_supports(scenario);
  double min_own = 1.0, max_own = 0.0;
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    // 1 - (mass outside the group): a reconstruction supported entirely
    // inside its group scores exactly 1 regardless of how its in-group mass
    // happens to round, which keeps perfect cases at a gap of exactly 0.
    double outside = 0.0;
    for (std::size_t x = 0; x < recon[a].size(); ++x) {
      if (std::find(supports[a].begin(), supports[a].end(), x) ==
          supports[a].end()) {
        outside += recon[a][x];
      }
    }
    const double own = 1.0 - outside;
    min_own = std::min(min_own, own);
    max_own = std::max(max_own, own);
  }
  // max over pairs |own_i - own_j| is attained by the extremes.
  return max_own - min_own;
}

double pr_gap(const DiscreteScenario& scenario, const EstimatorKernel& kernel) {
  const auto recon = push_forward(scenario, kernel);
  const auto supports = group_supports(scenario);
  std::vector<DiscretePmf> signal_laws;
  signal_laws.reserve(scenario.n_groups());
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    signal_laws.push_back(scenario.p_x_given_a(a));
  }
  // Both pooled laws accumulate in the same group order, so identical
  // per-group laws give bitwise-identical membership masses.
  const std::vector<double> pooled_signal = pooled_law(scenario, signal_laws);
  const std::vector<double> pooled_recon = pooled_law(scenario, recon);
  double gap = 0.0;
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    gap = std::max(gap, std::abs(membership_mass(pooled_recon, supports[a]) -
                                 membership_mass(pooled_signal, supports[a])));
  }
  return gap;
}

double cpr_residual(const DiscreteScenario& scenario,
                    const EstimatorKernel& kernel) {
  if (kernel.rows() != scenario.y_size() ||
      kernel.cols() < scenario.x_size()) {
    throw std::invalid_argument(
        "cpr_residual: kernel shape does not match the scenario");
  }
  const auto supports = group_supports(scenario);
  std::vector<DiscretePmf> signal_laws;
  signal_laws.reserve(scenario.n_groups());
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    signal_laws.push_back(scenario.p_x_given_a(a));
  }
  const std::vector<double> pooled_signal = pooled_law(scenario, signal_laws);

  double residual = 0.0;
  for (std::size_t y = 0; y < scenario.y_size(); ++y) {
    // P(Y=y) and the per-group posterior numerators share the same pooled
    // signal values, so each posterior is a ratio of consistent sums and
    // stays within [0, 1] regardless of how small P(Y=y) is.
    double p_y = 0.0;
    for (std::size_t x = 0; x < scenario.x_size(); ++x) {
      p_y += pooled_signal[x] * scenario.degradation()(x, y);
    }
    if (p_y == 0.0) continue;  // the conditional laws are undefined here
    for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
      double signal_numerator = 0.0;
      double recon_mass = 0.0;
      for (std::size_t x : supports[a]) {
        signal_numerator += pooled_signal[x] * scenario.degradation()(x, y);
        recon_mass += kernel(y, x);
      }
      residual =
          std::max(residual, std::abs(recon_mass - signal_numerator / p_y));
    }
  }
  return residual;
}

}  // namespace pf
