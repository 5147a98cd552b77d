#pragma once

#include "pf/theorems/scenario.hpp"

namespace pf {

//! Prior group-fairness diagnostics evaluated exactly on discrete
//! scenarios. Group membership sets X_a are the supports of the per-group
//! signal laws; reconstruction symbols beyond the signal alphabet never
//! belong to any group.

//! Representation demographic parity gap:
//! max over group pairs of |P(Xhat in X_a | A=a_i) - P(Xhat in X_a | A=a_j)|.
//! Own-group membership mass is computed as 1 - (mass outside the group),
//! so a reconstruction supported entirely inside its group yields exactly 1
//! and perfect reconstructions yield a gap of exactly 0.
double rdp_gap(const DiscreteScenario& scenario, const EstimatorKernel& kernel);

//! Proportional representation gap:
//! max over groups of |P(Xhat in X_a) - P(X in X_a)|, both membership
//! masses computed from pooled laws accumulated in the same group order so
//! identical laws cancel exactly.
double pr_gap(const DiscreteScenario& scenario, const EstimatorKernel& kernel);

//! Conditional proportional representation residual:
//! max over (a, y) with P(Y=y) > 0 of
//! |P(Xhat in X_a | Y=y) - P(X in X_a | Y=y)|, where the reconstruction
//! posterior is the kernel row and the signal posterior comes from the
//! pooled signal law pushed through the degradation.
double cpr_residual(const DiscreteScenario& scenario,
                    const EstimatorKernel& kernel);

}  // namespace pf
