#include "pf/theorems/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "detail.hpp"

namespace pf {
namespace {

struct Instance {
  std::size_t n_groups;
  std::size_t ny;
  std::size_t nxh;
  std::vector<double> weights;
  //! p_{Y|A} laid out per group, and signal laws zero-extended to nxh.
  std::vector<std::vector<double>> py;
  std::vector<std::vector<double>> px;
};

Instance make_instance(const DiscreteScenario& scenario,
                       std::span<const double> weights,
                       std::size_t x_hat_size) {
  if (weights.size() != scenario.n_groups()) {
    throw std::invalid_argument(
        "min_joint_gpi: need exactly one weight per group");
  }
  bool any_positive = false;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument(
          "min_joint_gpi: weights must be nonnegative and finite");
    }
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive) {
    throw std::invalid_argument("min_joint_gpi: weights must not all be zero");
  }
  Instance inst;
  inst.n_groups = scenario.n_groups();
  inst.ny = scenario.y_size();
  inst.nxh = x_hat_size == 0 ? scenario.x_size() : x_hat_size;
  if (inst.nxh < scenario.x_size()) {
    throw std::invalid_argument(
        "min_joint_gpi: x_hat_size must cover the X alphabet");
  }
  inst.weights.assign(weights.begin(), weights.end());
  inst.py.resize(inst.n_groups);
  inst.px.resize(inst.n_groups);
  for (std::size_t a = 0; a < inst.n_groups; ++a) {
    const auto& pya = scenario.p_y_given_a(a).probs();
    inst.py[a].assign(pya.begin(), pya.end());
    inst.px[a].assign(inst.nxh, 0.0);
    for (std::size_t x = 0; x < scenario.x_size(); ++x) {
      inst.px[a][x] = scenario.p_x_given_a(a)[x];
    }
  }
  return inst;
}

//! q_a = K^T p_{Y|A}(.|a) for every group, writing into `recon`.
void push_all(const Instance& inst, const std::vector<double>& kernel,
              std::vector<std::vector<double>>& recon) {
  for (std::size_t a = 0; a < inst.n_groups; ++a) {
    auto& q = recon[a];
    std::fill(q.begin(), q.end(), 0.0);
    for (std::size_t y = 0; y < inst.ny; ++y) {
      const double py = inst.py[a][y];
      if (py == 0.0) continue;
      const double* row = kernel.data() + y * inst.nxh;
      for (std::size_t x = 0; x < inst.nxh; ++x) q[x] += py * row[x];
    }
  }
}

double objective_of(const Instance& inst,
                    const std::vector<std::vector<double>>& recon) {
  double f = 0.0;
  for (std::size_t a = 0; a < inst.n_groups; ++a) {
    if (inst.weights[a] == 0.0) continue;
    double tv = 0.0;
    for (std::size_t x = 0; x < inst.nxh; ++x) {
      tv += std::abs(recon[a][x] - inst.px[a][x]);
    }
    f += inst.weights[a] * 0.5 * tv;
  }
  return f;
}

double evaluate_kernel(const Instance& inst, const std::vector<double>& kernel,
                       std::vector<std::vector<double>>& recon) {
  push_all(inst, kernel, recon);
  return objective_of(inst, recon);
}

}  // namespace

MinJointGpiResult min_joint_gpi(const DiscreteScenario& scenario,
                                std::span<const double> weights,
                                const FrankWolfeOptions& options) {
  if (options.max_iters == 0 || options.window == 0) {
    throw std::invalid_argument(
        "min_joint_gpi: max_iters and window must be >= 1");
  }
  Instance inst = make_instance(scenario, weights, options.x_hat_size);
  const std::size_t ny = inst.ny, nxh = inst.nxh;

  std::vector<double> kernel(ny * nxh, 1.0 / static_cast<double>(nxh));
  std::vector<std::vector<double>> recon(inst.n_groups,
                                         std::vector<double>(nxh, 0.0));
  std::vector<double> sign_coef(inst.n_groups * nxh, 0.0);
  std::vector<double> grad_row(nxh, 0.0);

  std::vector<double> best_kernel = kernel;
  double best_f = std::numeric_limits<double>::infinity();
  std::vector<double> trace;
  trace.reserve(options.max_iters);
  bool converged = false;
  std::size_t iterations = 0;

  for (std::size_t t = 0; t < options.max_iters; ++t) {
    iterations = t + 1;
    const double f = evaluate_kernel(inst, kernel, recon);
    if (f < best_f) {
      best_f = f;
      best_kernel = kernel;
    }
    trace.push_back(best_f);
    if (t >= options.window &&
        trace[t - options.window] - best_f <= options.tolerance) {
      converged = true;
      break;
    }

    // Subgradient coefficients: d f / d q_a(x) = w_a/2 * sign(q_a - p_a),
    // with sign(0) = 0 at ties.
    for (std::size_t a = 0; a < inst.n_groups; ++a) {
      const double half_w = 0.5 * inst.weights[a];
      for (std::size_t x = 0; x < nxh; ++x) {
        const double d = recon[a][x] - inst.px[a][x];
        sign_coef[a * nxh + x] = d > 0.0 ? half_w : (d < 0.0 ? -half_w : 0.0);
      }
    }

    // Per-row linear subproblem and the 2/(t+2) step, fused row by row:
    // G[y, x] = sum_a sign_coef[a, x] * p_{Y|A}(y|a).
    const double gamma = 2.0 / static_cast<double>(t + 2);
    for (std::size_t y = 0; y < ny; ++y) {
      std::fill(grad_row.begin(), grad_row.end(), 0.0);
      for (std::size_t a = 0; a < inst.n_groups; ++a) {
        const double py = inst.py[a][y];
        if (py == 0.0) continue;
        const double* coef = sign_coef.data() + a * nxh;
        for (std::size_t x = 0; x < nxh; ++x) grad_row[x] += py * coef[x];
      }
      std::size_t vertex = 0;
      for (std::size_t x = 1; x < nxh; ++x) {
        if (grad_row[x] < grad_row[vertex]) vertex = x;
      }
      double* row = kernel.data() + y * nxh;
      for (std::size_t x = 0; x < nxh; ++x) row[x] *= 1.0 - gamma;
      row[vertex] += gamma;
    }
  }

  // Row sums drift by a few ulps over thousands of convex steps; re-pin
  // each row and report the exact objective of the kernel returned.
  for (std::size_t y = 0; y < ny; ++y) {
    std::vector<double> row(best_kernel.begin() + static_cast<std::ptrdiff_t>(y * nxh),
                            best_kernel.begin() + static_cast<std::ptrdiff_t>((y + 1) * nxh));
    row = detail::pin_to_unit_sum(std::move(row));
    std::copy(row.begin(), row.end(),
              best_kernel.begin() + static_cast<std::ptrdiff_t>(y * nxh));
  }
  MinJointGpiResult result{
      EstimatorKernel(ny, nxh, best_kernel),
      evaluate_kernel(inst, best_kernel, recon),
      converged,
      iterations,
      std::move(trace),
  };
  return result;
}

double grid_min_joint_gpi(const DiscreteScenario& scenario,
                          std::span<const double> weights, double resolution,
                          std::size_t x_hat_size) {
  Instance inst = make_instance(scenario, weights, x_hat_size);
  const std::size_t ny = inst.ny, nxh = inst.nxh;
  if (ny * nxh > 6) {
    throw std::invalid_argument(
        "grid_min_joint_gpi: instance too large (more than 6 kernel entries)");
  }
  if (!(resolution > 0.0) || resolution > 1.0) {
    throw std::invalid_argument(
        "grid_min_joint_gpi: resolution must be in (0, 1]");
  }
  const std::size_t m =
      static_cast<std::size_t>(std::llround(1.0 / resolution));

  // All compositions of m into nxh parts, as kernel rows divided by m.
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> parts(nxh, 0);
  const double inv_m = 1.0 / static_cast<double>(m);
  // Odometer over nxh-1 free entries; the last part absorbs the remainder.
  while (true) {
    std::size_t used = 0;
    for (std::size_t i = 0; i + 1 < nxh; ++i) used += parts[i];
    if (used <= m) {
      std::vector<double> row(nxh);
      for (std::size_t i = 0; i + 1 < nxh; ++i) {
        row[i] = static_cast<double>(parts[i]) * inv_m;
      }
      row[nxh - 1] = static_cast<double>(m - used) * inv_m;
      rows.push_back(std::move(row));
    }
    // Advance the odometer.
    std::size_t i = 0;
    for (; i + 1 < nxh; ++i) {
      if (++parts[i] <= m) break;
      parts[i] = 0;
    }
    if (i + 1 >= nxh) break;
  }

  double combos = 1.0;
  for (std::size_t y = 0; y < ny; ++y) combos *= static_cast<double>(rows.size());
  if (combos > 5e7) {
    throw std::invalid_argument(
        "grid_min_joint_gpi: instance too large (" + std::to_string(combos) +
        " grid kernels)");
  }

  std::vector<std::size_t> idx(ny, 0);
  std::vector<double> kernel(ny * nxh, 0.0);
  std::vector<std::vector<double>> recon(inst.n_groups,
                                         std::vector<double>(nxh, 0.0));
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t y = 0; y < ny; ++y) {
      std::copy(rows[idx[y]].begin(), rows[idx[y]].end(),
                kernel.begin() + static_cast<std::ptrdiff_t>(y * nxh));
    }
    best = std::min(best, evaluate_kernel(inst, kernel, recon));
    std::size_t y = 0;
    for (; y < ny; ++y) {
      if (++idx[y] < rows.size()) break;
      idx[y] = 0;
    }
    if (y >= ny) break;
  }
  return best;
}

}  // namespace pf
