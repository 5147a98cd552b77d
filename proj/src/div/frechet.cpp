#include "pf/div/frechet.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "detail.hpp"
#include "pf/simd/simd.hpp"

namespace pf {
namespace {

constexpr double kSymmetryTolerance = 1e-10;
constexpr double kPsdTolerance = 1e-8;
constexpr double kClampWarnRatio = 1e-6;

using Matrix = Eigen::MatrixXd;

Matrix covariance_matrix(const GaussianMoments& g, const char* which) {
  const std::size_t d = g.dim();
  if (g.covariance.size() != d * d) {
    throw std::invalid_argument(std::string("frechet_distance: ") + which +
                                " covariance size does not match mean");
  }
  Matrix s(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          g.covariance[i * d + j];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (std::abs(s(i, j) - s(j, i)) > kSymmetryTolerance) {
        throw std::invalid_argument(std::string("frechet_distance: ") + which +
                                    " covariance is not symmetric");
      }
    }
  }
  return s;
}

// Eigendecomposition with a PSD check: eigenvalues below -kPsdTolerance are
// rejected, small negatives are clamped to 0.
void psd_eigs(const Matrix& s, const char* which, Eigen::VectorXd& evals,
              Matrix& evecs) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(s);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(std::string("frechet_distance: ") + which +
                             " eigendecomposition failed");
  }
  evals = solver.eigenvalues();
  evecs = solver.eigenvectors();
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < -kPsdTolerance) {
      throw std::invalid_argument(std::string("frechet_distance: ") + which +
                                  " covariance is not PSD (eigenvalue " +
                                  std::to_string(evals(i)) + ")");
    }
    if (evals(i) < 0.0) evals(i) = 0.0;
  }
}

}  // namespace

GaussianMoments fit_gaussian_moments(const FeatureSet& a) {
  const std::size_t n = a.rows();
  const std::size_t d = a.dim();
  if (n < 2) {
    throw std::invalid_argument("fit_gaussian_moments: need at least 2 rows");
  }
  // Rows are accumulated in lexicographic order, which makes the fitted
  // moments exactly invariant to row permutations.
  const std::vector<std::size_t> order = detail::canonical_row_order(a);
  GaussianMoments g;
  g.mean.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = a.row(order[i]);
    for (std::size_t k = 0; k < d; ++k) g.mean[k] += row[k];
  }
  for (double& v : g.mean) v /= static_cast<double>(n);

  // Centered columns laid out contiguously so covariance entries are plain
  // inner products.
  std::vector<double> centered(d * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = a.row(order[i]);
    for (std::size_t k = 0; k < d; ++k) {
      centered[k * n + i] = row[k] - g.mean[k];
    }
  }
  g.covariance.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    const std::span<const double> ci(centered.data() + i * n, n);
    for (std::size_t j = i; j < d; ++j) {
      const std::span<const double> cj(centered.data() + j * n, n);
      const double cov = pf::simd::dot(ci, cj) / static_cast<double>(n - 1);
      g.covariance[i * d + j] = cov;
      g.covariance[j * d + i] = cov;
    }
  }
  return g;
}

double frechet_distance(const GaussianMoments& p, const GaussianMoments& q,
                        FrechetInfo* info) {
  if (p.dim() == 0 || p.dim() != q.dim()) {
    throw std::invalid_argument("frechet_distance: dimension mismatch");
  }
  const std::size_t d = p.dim();
  const Matrix sp = covariance_matrix(p, "first");
  const Matrix sq = covariance_matrix(q, "second");

  Eigen::VectorXd evals_p;
  Matrix evecs_p;
  psd_eigs(sp, "first", evals_p, evecs_p);
  {
    Eigen::VectorXd evals_q;
    Matrix evecs_q;
    psd_eigs(sq, "second", evals_q, evecs_q);
  }

  const Matrix sqrt_p =
      evecs_p * evals_p.cwiseSqrt().asDiagonal() * evecs_p.transpose();
  Matrix cross = sqrt_p * sq * sqrt_p;
  cross = 0.5 * (cross + cross.transpose().eval());

  Eigen::SelfAdjointEigenSolver<Matrix> solver(cross);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("frechet_distance: cross-term eigendecomposition failed");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  const double max_ev = ev.size() > 0 ? ev.maxCoeff() : 0.0;
  const double min_ev = ev.size() > 0 ? ev.minCoeff() : 0.0;
  const bool warn = min_ev < -kClampWarnRatio * std::max(max_ev, 0.0);
  if (warn) {
    std::fprintf(stderr,
                 "frechet_distance: clamping cross-term eigenvalue %.3e "
                 "(largest %.3e)\n",
                 min_ev, max_ev);
  }
  if (info != nullptr) {
    info->min_eigenvalue = min_ev;
    info->max_eigenvalue = max_ev;
    info->clamped_warning = warn;
  }
  double trace_sqrt = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    trace_sqrt += std::sqrt(std::max(ev(i), 0.0));
  }

  double mean_sq = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double dm = p.mean[k] - q.mean[k];
    mean_sq += dm * dm;
  }
  const double result = mean_sq + sp.trace() + sq.trace() - 2.0 * trace_sqrt;
  return std::max(result, 0.0);
}

}  // namespace pf
