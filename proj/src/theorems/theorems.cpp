#include "pf/theorems/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "detail.hpp"

namespace pf {
namespace {

//! TV between a reconstruction law over the (possibly extended) Xhat
//! alphabet and a signal law over the X alphabet, zero-extending the latter.
double tv_extended(const DiscretePmf& signal, const DiscretePmf& recon) {
  double sum = 0.0;
  for (std::size_t x = 0; x < recon.size(); ++x) {
    const double p = x < signal.size() ? signal[x] : 0.0;
    sum += std::abs(p - recon[x]);
  }
  return 0.5 * sum;
}

std::vector<double> all_gpi_tv(const DiscreteScenario& scenario,
                               const std::vector<DiscretePmf>& recon) {
  std::vector<double> gpi(scenario.n_groups());
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    gpi[a] = tv_extended(scenario.p_x_given_a(a), recon[a]);
  }
  return gpi;
}

//! TV between the pooled signal law and the pooled reconstruction law
//! (zero-extended over extra Xhat symbols).
double pooled_pi_tv(const DiscreteScenario& scenario,
                    const std::vector<DiscretePmf>& recon) {
  const DiscretePmf pooled_x = scenario.pooled_x();
  const std::size_t cols = recon.front().size();
  double sum = 0.0;
  for (std::size_t x = 0; x < cols; ++x) {
    double xhat_mass = 0.0;
    for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
      xhat_mass += scenario.p_a()[a] * recon[a][x];
    }
    const double x_mass = x < pooled_x.size() ? pooled_x[x] : 0.0;
    sum += std::abs(x_mass - xhat_mass);
  }
  return 0.5 * sum;
}

}  // namespace

double gpi_tv_exact(const DiscreteScenario& scenario,
                    const EstimatorKernel& kernel, std::size_t group) {
  if (group >= scenario.n_groups()) {
    throw std::invalid_argument("gpi_tv_exact: group out of range");
  }
  const DiscretePmf recon = kernel.push(scenario.p_y_given_a(group));
  return tv_extended(scenario.p_x_given_a(group), recon);
}

double gp_exact(const DiscreteScenario& scenario, const EstimatorKernel& kernel,
                std::size_t group) {
  if (group >= scenario.n_groups()) {
    throw std::invalid_argument("gp_exact: group out of range");
  }
  const DiscretePmf recon = kernel.push(scenario.p_y_given_a(group));
  double mass = 0.0;
  for (std::size_t x : scenario.p_x_given_a(group).support()) {
    mass += recon[x];
  }
  return mass;
}

double gr_exact(const DiscreteScenario& scenario, const EstimatorKernel& kernel,
                std::size_t group) {
  if (group >= scenario.n_groups()) {
    throw std::invalid_argument("gr_exact: group out of range");
  }
  const DiscretePmf recon = kernel.push(scenario.p_y_given_a(group));
  const DiscretePmf& signal = scenario.p_x_given_a(group);
  double mass = 0.0;
  for (std::size_t x : recon.support()) {
    if (x < signal.size()) mass += signal[x];
  }
  return mass;
}

PrecisionRecallBoundReport check_theorem1(const DiscreteScenario& scenario,
                                          const EstimatorKernel& kernel) {
  PrecisionRecallBoundReport report;
  report.ok = true;
  report.groups.reserve(scenario.n_groups());
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    GroupPrecisionRecallBound entry;
    entry.group = a;
    entry.gpi_tv = gpi_tv_exact(scenario, kernel, a);
    entry.gp = gp_exact(scenario, kernel, a);
    entry.gr = gr_exact(scenario, kernel, a);
    entry.slack = std::min(entry.gp, entry.gr) - (1.0 - entry.gpi_tv);
    if (entry.slack < -1e-12) report.ok = false;
    report.groups.push_back(entry);
  }
  return report;
}

GpiDisparityReport check_theorem4(const DiscreteScenario& scenario,
                                  const EstimatorKernel& kernel,
                                  double pi_tolerance,
                                  double slack_tolerance) {
  const auto recon = push_forward(scenario, kernel);
  GpiDisparityReport report;
  report.pi_tv = pooled_pi_tv(scenario, recon);
  report.applicable = report.pi_tv <= pi_tolerance;

  const std::vector<double> gpi = all_gpi_tv(scenario, recon);
  report.ok = report.applicable;
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    const double pa = scenario.p_a()[a];
    if (pa <= 0.0) continue;  // the bound is vacuous for empty groups
    GpiDisparityBound entry;
    entry.group = a;
    entry.gpi_tv = gpi[a];
    double others = 0.0;
    for (std::size_t b = 0; b < scenario.n_groups(); ++b) {
      if (b != a) others += scenario.p_a()[b] * gpi[b];
    }
    entry.bound = others / pa;
    entry.slack = entry.bound - entry.gpi_tv;
    if (entry.slack < -slack_tolerance) report.ok = false;
    report.groups.push_back(entry);
  }
  return report;
}

MajorityGpiReport check_theorem3(const DiscreteScenario& scenario,
                                 const EstimatorKernel& kernel,
                                 double pi_tolerance, double gpi_threshold) {
  const auto recon = push_forward(scenario, kernel);
  MajorityGpiReport report;
  report.pi_tv = pooled_pi_tv(scenario, recon);
  report.gpi_tv = all_gpi_tv(scenario, recon);

  if (report.pi_tv > pi_tolerance) {
    report.verdict = MajorityGpiVerdict::no_perfect_pi;
    return report;
  }
  std::size_t majority = 0;
  bool has_majority = false;
  for (std::size_t a = 0; a < scenario.n_groups(); ++a) {
    if (scenario.p_a()[a] > 0.5) {
      majority = a;
      has_majority = true;
      break;
    }
  }
  if (!has_majority) {
    report.verdict = MajorityGpiVerdict::no_majority_group;
    return report;
  }
  report.majority_group = majority;
  const bool any_positive = std::any_of(
      report.gpi_tv.begin(), report.gpi_tv.end(),
      [gpi_threshold](double g) { return g > gpi_threshold; });
  if (!any_positive) {
    report.verdict = MajorityGpiVerdict::all_gpi_zero;
    return report;
  }

  std::size_t worst = 0, best = 0;
  for (std::size_t a = 1; a < scenario.n_groups(); ++a) {
    if (report.gpi_tv[a] > report.gpi_tv[worst]) worst = a;
    if (report.gpi_tv[a] < report.gpi_tv[best]) best = a;
  }
  report.worst_group = worst;
  report.best_group = best;
  report.gap = report.gpi_tv[worst] - report.gpi_tv[best];
  report.verdict = report.gap > 0.0 ? MajorityGpiVerdict::holds
                                    : MajorityGpiVerdict::violated;
  return report;
}

// ---------------------------------------------------------------------------
// Fixtures

std::pair<DiscreteScenario, EstimatorKernel> dogcat_fixture() {
  constexpr std::size_t kSymbols = 20;  // 0..9 dogs, 10..19 cats
  std::vector<double> dogs(kSymbols, 0.0), cats(kSymbols, 0.0);
  for (std::size_t i = 0; i < 10; ++i) {
    dogs[i] = 0.1;
    cats[10 + i] = 0.1;
  }
  DiscreteScenario scenario(
      DiscretePmf({0.5, 0.5}),
      {DiscretePmf(detail::pin_to_unit_sum(std::move(dogs))),
       DiscretePmf(detail::pin_to_unit_sum(std::move(cats)))},
      StochasticMatrix::identity(kSymbols));

  // Collapse every dog measurement onto symbol 0; restore cats losslessly.
  std::vector<double> k(kSymbols * kSymbols, 0.0);
  for (std::size_t y = 0; y < 10; ++y) k[y * kSymbols + 0] = 1.0;
  for (std::size_t y = 10; y < kSymbols; ++y) k[y * kSymbols + y] = 1.0;
  return {std::move(scenario), EstimatorKernel(kSymbols, kSymbols, std::move(k))};
}

namespace {

//! alpha I + (1 - alpha) * (every row = the scenario's pooled signal law):
//! on a lossless measurement this kernel preserves the pooled law exactly,
//! so it attains perfect PI while leaving per-group gaps.
EstimatorKernel mixing_kernel(const DiscreteScenario& scenario, double alpha) {
  const DiscretePmf pooled = scenario.pooled_x();
  const std::size_t n = scenario.x_size();
  std::vector<double> k(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      k[y * n + x] = (y == x ? alpha : 0.0) + (1.0 - alpha) * pooled[x];
    }
  }
  return EstimatorKernel(n, n, std::move(k));
}

}  // namespace

std::pair<DiscreteScenario, EstimatorKernel> majority_mixing_fixture() {
  DiscreteScenario scenario(
      DiscretePmf({0.7, 0.3}),
      {DiscretePmf(detail::pin_to_unit_sum({5.0 / 7.0, 2.0 / 7.0, 0.0})),
       DiscretePmf(detail::pin_to_unit_sum({0.0, 1.0 / 3.0, 2.0 / 3.0}))},
      StochasticMatrix::identity(3));
  EstimatorKernel kernel = mixing_kernel(scenario, 0.5);
  return {std::move(scenario), std::move(kernel)};
}

std::pair<DiscreteScenario, EstimatorKernel> three_group_mixing_fixture() {
  DiscreteScenario scenario(
      DiscretePmf({0.6, 0.25, 0.15}),
      {DiscretePmf({0.5, 0.5, 0.0, 0.0}), DiscretePmf({0.0, 0.25, 0.75, 0.0}),
       DiscretePmf({0.0, 0.0, 0.5, 0.5})},
      StochasticMatrix::identity(4));
  EstimatorKernel kernel = mixing_kernel(scenario, 0.5);
  return {std::move(scenario), std::move(kernel)};
}

std::pair<DiscreteScenario, EstimatorKernel> swap_fixture() {
  DiscreteScenario scenario(
      DiscretePmf({0.5, 0.5}),
      {DiscretePmf({1.0, 0.0}), DiscretePmf({0.0, 1.0})},
      StochasticMatrix::identity(2));
  EstimatorKernel kernel(2, 2, {0.0, 1.0, 1.0, 0.0});
  return {std::move(scenario), std::move(kernel)};
}

std::pair<DiscreteScenario, EstimatorKernel> random_perfect_pi_construction(
    std::uint64_t seed, std::size_t n_groups, std::size_t n_symbols) {
  if (n_groups < 2 || n_symbols < n_groups || n_symbols < 2) {
    throw std::invalid_argument(
        "random_perfect_pi_construction: need >= 2 groups and n_symbols >= "
        "max(n_groups, 2)");
  }
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double m = static_cast<double>(n_symbols);

  // Group prior with every group's mass bounded away from zero.
  std::vector<double> prior(n_groups);
  {
    std::exponential_distribution<double> expo(1.0);
    double total = 0.0;
    for (double& p : prior) {
      p = expo(eng);
      total += p;
    }
    for (double& p : prior) {
      p = 0.8 * (p / total) + 0.2 / static_cast<double>(n_groups);
    }
    prior = detail::pin_to_unit_sum(std::move(prior));
  }

  // Zero-sum perturbations eta_a with sum_a prior_a * eta_a = 0, so the
  // pooled law sum_a prior_a (1/m + eta_a) is exactly uniform. The last
  // group's perturbation balances the books; everything is then scaled so
  // every entry of every law stays within [1/(2m), 3/(2m)].
  std::vector<std::vector<double>> eta(n_groups,
                                       std::vector<double>(n_symbols, 0.0));
  for (std::size_t a = 0; a + 1 < n_groups; ++a) {
    double mean = 0.0;
    for (double& e : eta[a]) {
      e = unif(eng) / (4.0 * m);
      mean += e;
    }
    mean /= m;
    for (double& e : eta[a]) e -= mean;
  }
  for (std::size_t x = 0; x < n_symbols; ++x) {
    double weighted = 0.0;
    for (std::size_t a = 0; a + 1 < n_groups; ++a) {
      weighted += prior[a] * eta[a][x];
    }
    eta[n_groups - 1][x] = -weighted / prior[n_groups - 1];
  }
  double max_abs = 0.0;
  for (const auto& e : eta) {
    for (double v : e) max_abs = std::max(max_abs, std::abs(v));
  }
  const double cap = 1.0 / (2.0 * m);
  const double scale = max_abs > cap ? cap / max_abs : 1.0;

  std::vector<DiscretePmf> laws;
  laws.reserve(n_groups);
  for (std::size_t a = 0; a < n_groups; ++a) {
    std::vector<double> law(n_symbols);
    for (std::size_t x = 0; x < n_symbols; ++x) {
      law[x] = 1.0 / m + scale * eta[a][x];
    }
    laws.push_back(DiscretePmf(detail::pin_to_unit_sum(std::move(law))));
  }

  DiscreteScenario scenario(DiscretePmf(std::move(prior)), std::move(laws),
                            StochasticMatrix::identity(n_symbols));

  // Random permutation kernel: preserves the uniform pooled law.
  std::vector<std::size_t> perm(n_symbols);
  for (std::size_t i = 0; i < n_symbols; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), eng);
  std::vector<double> k(n_symbols * n_symbols, 0.0);
  for (std::size_t y = 0; y < n_symbols; ++y) k[y * n_symbols + perm[y]] = 1.0;
  return {std::move(scenario),
          EstimatorKernel(n_symbols, n_symbols, std::move(k))};
}

}  // namespace pf
