#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pf/theorems/scenario.hpp"

namespace pf {

//! Frank-Wolfe controls for min_joint_gpi. The run stops early once the
//! best objective has improved by less than `tolerance` over the last
//! `window` iterations; otherwise it runs to max_iters and the result is
//! flagged as not converged.
struct FrankWolfeOptions {
  std::size_t max_iters = 20000;
  double tolerance = 1e-4;
  std::size_t window = 500;
  //! Xhat alphabet size; 0 means "the X alphabet".
  std::size_t x_hat_size = 0;
};

struct MinJointGpiResult {
  EstimatorKernel kernel;  //!< best iterate found (row-stochastic)
  double objective;        //!< its objective value; an upper bound on the min
  bool converged;
  std::size_t iterations;  //!< iterations actually run
  //! Best-so-far objective recorded at every iteration (non-increasing).
  std::vector<double> best_trace;
};

//! Approximately minimizes f(K) = sum_a weights[a] * GPI_TV(a) over
//! row-stochastic kernels K by Frank-Wolfe: at each step the linear
//! subproblem min_V <G, V> over the product of row simplices is solved by
//! putting each row's mass on its smallest subgradient entry (ties to the
//! smallest column index; TV ties contribute subgradient 0), followed by the
//! classic 2/(t+2) step. f is convex, so the returned objective certifies
//! an upper bound on the true minimum; a matching lower bound at grid
//! resolution is available from grid_min_joint_gpi on tiny instances.
//!
//! weights must have one nonnegative finite entry per group, not all zero.
MinJointGpiResult min_joint_gpi(const DiscreteScenario& scenario,
                                std::span<const double> weights,
                                const FrankWolfeOptions& options = {});

//! Exhaustive grid minimum of the same objective: every kernel row ranges
//! over the simplex grid {k/m : sum k = m} with m = round(1 / resolution).
//! Requires y_size * x_hat_size <= 6 free parameters and a combination
//! count under 5e7; throws std::invalid_argument otherwise.
double grid_min_joint_gpi(const DiscreteScenario& scenario,
                          std::span<const double> weights, double resolution,
                          std::size_t x_hat_size = 0);

}  // namespace pf
