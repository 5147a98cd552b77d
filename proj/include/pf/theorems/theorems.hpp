#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pf/theorems/scenario.hpp"

namespace pf {

//! Exact per-group total variation GPI: TV(p_{X|A}(.|a), p_{Xhat|A}(.|a)),
//! with the signal law zero-extended over any extra Xhat symbols.
double gpi_tv_exact(const DiscreteScenario& scenario,
                    const EstimatorKernel& kernel, std::size_t group);

//! Exact group precision P(Xhat in X_a | A = a): reconstruction mass landing
//! inside the group's signal support (probabilities > kSupportThreshold).
double gp_exact(const DiscreteScenario& scenario, const EstimatorKernel& kernel,
                std::size_t group);

//! Exact group recall P(X in Xhat_a | A = a): signal mass covered by the
//! reconstruction support.
double gr_exact(const DiscreteScenario& scenario, const EstimatorKernel& kernel,
                std::size_t group);

//! Group precision and recall are both bounded below by 1 - GPI_TV.
struct GroupPrecisionRecallBound {
  std::size_t group;
  double gpi_tv;
  double gp;
  double gr;
  //! min(gp, gr) - (1 - gpi_tv); the bound holds when this is >= 0 (up to
  //! the -1e-12 numerical allowance).
  double slack;
};

struct PrecisionRecallBoundReport {
  bool ok;  // every group's slack >= -1e-12
  std::vector<GroupPrecisionRecallBound> groups;
};

//! Verify the precision/recall lower bounds on every group.
PrecisionRecallBoundReport check_theorem1(const DiscreteScenario& scenario,
                                          const EstimatorKernel& kernel);

//! Per-group side of the perfect-PI disparity bound
//! GPI_TV(a) <= (1/P(A=a)) sum_{a' != a} P(A=a') GPI_TV(a').
struct GpiDisparityBound {
  std::size_t group;
  double gpi_tv;
  double bound;  // right-hand side above
  double slack;  // bound - gpi_tv; >= 0 when the bound holds
};

struct GpiDisparityReport {
  //! False when the kernel does not attain perfect PI (pooled
  //! reconstruction law differs from the pooled signal law beyond
  //! pi_tolerance); the bound is then not asserted.
  bool applicable;
  double pi_tv;  // TV between pooled signal and reconstruction laws
  bool ok;       // applicable and every slack >= -slack_tolerance
  std::vector<GpiDisparityBound> groups;
};

//! Groups with zero prior probability are omitted from the report (the
//! bound is vacuous for them).
GpiDisparityReport check_theorem4(const DiscreteScenario& scenario,
                                  const EstimatorKernel& kernel,
                                  double pi_tolerance = 1e-9,
                                  double slack_tolerance = 1e-12);

//! Outcome of the perfect-PI majority-group impossibility check: under
//! perfect PI, a strict-majority group, and at least one nonzero GPI, the
//! per-group GPIs cannot all be equal.
enum class MajorityGpiVerdict {
  holds,             // GPI spread is strictly positive, as guaranteed
  violated,          // preconditions met but GPIs all equal: implementation bug
  no_perfect_pi,     // pooled laws differ: not applicable
  no_majority_group, // no group has P(A=a) > 1/2: not applicable
  all_gpi_zero,      // every GPI is zero: not applicable
};

struct MajorityGpiReport {
  MajorityGpiVerdict verdict;
  double pi_tv = 0.0;
  std::size_t majority_group = 0;  // valid unless no_majority_group
  //! Witnessing pair: groups attaining the largest and smallest GPI.
  std::size_t worst_group = 0;
  std::size_t best_group = 0;
  double gap = 0.0;  // max GPI - min GPI
  std::vector<double> gpi_tv;
};

MajorityGpiReport check_theorem3(const DiscreteScenario& scenario,
                                 const EstimatorKernel& kernel,
                                 double pi_tolerance = 1e-9,
                                 double gpi_threshold = 1e-9);

// ---------------------------------------------------------------------------
// Fixtures

//! Two equally likely species, each uniform over 10 disjoint symbols, a
//! lossless measurement, and a restorer that collapses every first-species
//! measurement onto one fixed symbol while restoring the second species
//! perfectly. Satisfies the representation-parity diagnostics (RDP, CPR)
//! while GPI_TV = 0.9 for the collapsed species and 0 for the other.
std::pair<DiscreteScenario, EstimatorKernel> dogcat_fixture();

//! Two groups with prior [0.7, 0.3] over three symbols and the mixing
//! kernel K = 0.5 I + 0.5 (ones) p_X^T on a lossless measurement: perfect PI
//! by construction, GPI_TV = [3/28, 1/4], majority group strictly better.
std::pair<DiscreteScenario, EstimatorKernel> majority_mixing_fixture();

//! Three groups (majority 0.6) over four symbols with the same alpha = 0.5
//! mixing kernel: perfect PI with three distinct GPI values.
std::pair<DiscreteScenario, EstimatorKernel> three_group_mixing_fixture();

//! Equal-prior one-point groups on two symbols with the swap kernel: both
//! GPIs equal 1 and the perfect-PI disparity bound is tight (slack 0).
std::pair<DiscreteScenario, EstimatorKernel> swap_fixture();

//! Seeded perfect-PI construction: group laws engineered so the pooled
//! signal law is uniform, a lossless measurement, and a uniformly random
//! permutation kernel (which preserves the uniform pooled law exactly).
//! n_groups >= 2, n_symbols >= max(n_groups, 2).
std::pair<DiscreteScenario, EstimatorKernel> random_perfect_pi_construction(
    std::uint64_t seed, std::size_t n_groups, std::size_t n_symbols);

}  // namespace pf
