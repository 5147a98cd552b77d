#include "pf/fairness/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pf/div/frechet.hpp"
#include "pf/div/kid.hpp"
#include "pf/div/quadrature.hpp"
#include "pf/div/tv.hpp"
#include "pf/div/wasserstein.hpp"
#include "pf/simd/simd.hpp"
#include "pf/stats/kde.hpp"
#include "pf/stats/samples.hpp"

namespace pf {
namespace {

//! The single column of a 1-D feature set, by value.
std::vector<double> column_1d(const FeatureSet& f, const char* what) {
  if (f.dim() != 1) {
    throw std::invalid_argument(std::string("gpi: ") + what +
                                " requires 1-D features, got dimension " +
                                std::to_string(f.dim()));
  }
  return f.data();
}

double gpi_tv_kde_1d(const FeatureSet& real, const FeatureSet& recon) {
  const Samples1d real_samples(column_1d(real, "tv_kde_1d"));
  const Samples1d recon_samples(column_1d(recon, "tv_kde_1d"));
  const KdeDensity real_kde = kde_fit(real_samples, 1.0);
  const KdeDensity recon_kde = kde_fit(recon_samples, 1.0);

  // Integrate over the union of the two estimates' effective supports,
  // padded out to the kernel cutoff so no representable mass is missed.
  const auto [real_min, real_max] = std::minmax_element(
      real_samples.values().begin(), real_samples.values().end());
  const auto [recon_min, recon_max] = std::minmax_element(
      recon_samples.values().begin(), recon_samples.values().end());
  QuadratureSpec spec;
  spec.lo = std::min(*real_min - kKdeCutoffSigmas * real_kde.bandwidth(),
                     *recon_min - kKdeCutoffSigmas * recon_kde.bandwidth());
  spec.hi = std::max(*real_max + kKdeCutoffSigmas * real_kde.bandwidth(),
                     *recon_max + kKdeCutoffSigmas * recon_kde.bandwidth());
  return tv_continuous_1d(real_kde, recon_kde, spec);
}

void validate_input(const GroupEvaluationInput& input) {
  if (input.group.empty()) {
    throw std::invalid_argument("group id must be nonempty");
  }
  if (input.real_features.dim() != input.recon_features.dim()) {
    throw std::invalid_argument(
        "group '" + input.group + "': feature dimensions differ (" +
        std::to_string(input.real_features.dim()) + " vs " +
        std::to_string(input.recon_features.dim()) + ")");
  }
  const std::size_t n_recon = input.recon_features.rows();
  if (!input.labels.empty() && input.labels.size() != n_recon) {
    throw std::invalid_argument(
        "group '" + input.group + "': " + std::to_string(input.labels.size()) +
        " labels for " + std::to_string(n_recon) + " reconstructions");
  }
  for (const auto& [name, values] : input.paired_scalars) {
    if (values.size() != n_recon) {
      throw std::invalid_argument(
          "group '" + input.group + "': paired scalar '" + name + "' has " +
          std::to_string(values.size()) + " values for " +
          std::to_string(n_recon) + " reconstructions");
    }
  }
}

}  // namespace

std::string_view divergence_name(GpiDivergence d) {
  switch (d) {
    case GpiDivergence::kid:
      return "kid";
    case GpiDivergence::fid:
      return "fid";
    case GpiDivergence::tv_kde_1d:
      return "tv_kde_1d";
    case GpiDivergence::w1_1d:
      return "w1_1d";
  }
  throw std::invalid_argument("unknown divergence enumerator");
}

GpiDivergence divergence_from_name(std::string_view name) {
  if (name == "kid") return GpiDivergence::kid;
  if (name == "fid") return GpiDivergence::fid;
  if (name == "tv_kde_1d") return GpiDivergence::tv_kde_1d;
  if (name == "w1_1d") return GpiDivergence::w1_1d;
  throw std::invalid_argument("unknown divergence name: '" +
                              std::string(name) + "'");
}

double gpi(const GroupEvaluationInput& input, GpiDivergence divergence) {
  switch (divergence) {
    case GpiDivergence::kid:
      return kid(input.real_features, input.recon_features);
    case GpiDivergence::fid:
      return frechet_distance(fit_gaussian_moments(input.real_features),
                              fit_gaussian_moments(input.recon_features));
    case GpiDivergence::tv_kde_1d:
      return gpi_tv_kde_1d(input.real_features, input.recon_features);
    case GpiDivergence::w1_1d:
      return wasserstein1_empirical(
          column_1d(input.real_features, "w1_1d"),
          column_1d(input.recon_features, "w1_1d"));
  }
  throw std::invalid_argument("unknown divergence enumerator");
}

double group_precision_hit_rate(std::span<const std::string> labels,
                                std::string_view group) {
  if (labels.empty()) {
    throw std::invalid_argument("group_precision_hit_rate: empty labels");
  }
  const auto hits = std::count(labels.begin(), labels.end(), group);
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

namespace {

//! Squared distance to the k-th nearest neighbor within the set, the point
//! itself excluded. All comparisons stay in squared space: d^2 <= r^2 is
//! the same predicate as d <= r, without the square root's double rounding.
std::vector<double> knn_sq_radii(const FeatureSet& s, std::size_t k) {
  const std::size_t n = s.rows();
  std::vector<double> radii(n);
  std::vector<double> dists(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      dists[out++] = simd::squared_distance(s.row(i), s.row(j));
    }
    std::nth_element(dists.begin(),
                     dists.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     dists.end());
    radii[i] = dists[k - 1];
  }
  return radii;
}

bool covered_by_any_ball(std::span<const double> point, const FeatureSet& balls,
                         const std::vector<double>& sq_radii) {
  for (std::size_t j = 0; j < balls.rows(); ++j) {
    if (simd::squared_distance(point, balls.row(j)) <= sq_radii[j]) {
      return true;
    }
  }
  return false;
}

}  // namespace

KnnPrecisionRecall knn_precision_recall(const FeatureSet& real,
                                        const FeatureSet& recon,
                                        std::size_t k) {
  if (k == 0) {
    throw std::invalid_argument("knn_precision_recall: k must be >= 1");
  }
  if (real.dim() != recon.dim()) {
    throw std::invalid_argument(
        "knn_precision_recall: feature dimensions differ");
  }
  if (real.rows() < k + 1 || recon.rows() < k + 1) {
    throw std::invalid_argument(
        "knn_precision_recall: need at least k+1 = " + std::to_string(k + 1) +
        " points per set, got " + std::to_string(real.rows()) + " and " +
        std::to_string(recon.rows()));
  }
  const std::vector<double> real_radii = knn_sq_radii(real, k);
  const std::vector<double> recon_radii = knn_sq_radii(recon, k);

  std::size_t precision_hits = 0;
  for (std::size_t i = 0; i < recon.rows(); ++i) {
    if (covered_by_any_ball(recon.row(i), real, real_radii)) ++precision_hits;
  }
  std::size_t recall_hits = 0;
  for (std::size_t i = 0; i < real.rows(); ++i) {
    if (covered_by_any_ball(real.row(i), recon, recon_radii)) ++recall_hits;
  }
  return {static_cast<double>(precision_hits) /
              static_cast<double>(recon.rows()),
          static_cast<double>(recall_hits) / static_cast<double>(real.rows())};
}

GroupPsnrResult group_psnr(std::span<const ImagePair> pairs, double peak) {
  if (pairs.empty()) {
    throw std::invalid_argument("group_psnr: no image pairs");
  }
  if (!(peak > 0.0) || !std::isfinite(peak)) {
    throw std::invalid_argument("group_psnr: peak must be positive and finite");
  }
  GroupPsnrResult result;
  double sum_db = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ImagePair& pair = pairs[i];
    if (pair.real.size() != pair.recon.size() || pair.real.empty()) {
      throw std::invalid_argument(
          "group_psnr: pair " + std::to_string(i) + " shapes differ (" +
          std::to_string(pair.real.size()) + " vs " +
          std::to_string(pair.recon.size()) + ")");
    }
    double se = 0.0;
    for (std::size_t p = 0; p < pair.real.size(); ++p) {
      if (!std::isfinite(pair.real[p]) || !std::isfinite(pair.recon[p])) {
        throw std::invalid_argument("group_psnr: pair " + std::to_string(i) +
                                    " has a non-finite pixel");
      }
      const double d = pair.real[p] - pair.recon[p];
      se += d * d;
    }
    const double mse = se / static_cast<double>(pair.real.size());
    if (mse == 0.0) {
      // Identical pair: infinite PSNR. Excluded rather than capped; a cap
      // would silently distort group comparisons.
      ++result.excluded_pairs;
      continue;
    }
    sum_db += 10.0 * std::log10(peak * peak / mse);
    ++used;
  }
  if (result.excluded_pairs > 0) {
    std::cerr << "warning: group_psnr excluded " << result.excluded_pairs
              << " identical pair(s) with infinite PSNR from the mean\n";
  }
  if (used > 0) {
    result.mean_db = sum_db / static_cast<double>(used);
  }
  return result;
}

double paired_scalar_group_mean(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("paired_scalar_group_mean: empty input");
  }
  return mean(values);
}

DisparitySummary pf_disparity(const std::map<std::string, double>& per_group) {
  if (per_group.size() < 2) {
    throw std::invalid_argument("pf_disparity: need >= 2 groups, got " +
                                std::to_string(per_group.size()));
  }
  // The map iterates in key order, so a strict > scan leaves the
  // lexicographically smallest id as the winner among ties.
  auto it = per_group.begin();
  double min_value = it->second;
  double max_value = it->second;
  std::string worst = it->first;
  for (++it; it != per_group.end(); ++it) {
    if (it->second > max_value) {
      max_value = it->second;
      worst = it->first;
    }
    min_value = std::min(min_value, it->second);
  }
  DisparitySummary summary;
  summary.gap = max_value - min_value;
  if (min_value > 0.0) summary.ratio = max_value / min_value;
  summary.worst = std::move(worst);
  return summary;
}

FairnessReport evaluate_groups(std::span<const GroupEvaluationInput> inputs,
                               const EvaluationOptions& options) {
  if (inputs.size() < 2) {
    throw std::invalid_argument("evaluate_groups: need >= 2 groups, got " +
                                std::to_string(inputs.size()));
  }
  std::set<std::string_view> ids;
  for (const auto& input : inputs) {
    if (!ids.insert(input.group).second) {
      throw std::invalid_argument("evaluate_groups: duplicate group id '" +
                                  input.group + "'");
    }
  }
  std::vector<GpiDivergence> divergences;
  for (GpiDivergence d : options.divergences) {
    if (std::find(divergences.begin(), divergences.end(), d) ==
        divergences.end()) {
      divergences.push_back(d);
    }
  }

  FairnessReport report;
  report.groups.reserve(inputs.size());
  for (const auto& input : inputs) {
    validate_input(input);
    GroupReport group;
    group.group = input.group;
    for (GpiDivergence d : divergences) {
      const double value = gpi(input, d);
      group.gpi[std::string(divergence_name(d))] = value;
      if (d == GpiDivergence::kid && value < 0.0) group.kid_negative = true;
    }
    if (!input.labels.empty()) {
      group.gp_hit_rate = group_precision_hit_rate(input.labels, input.group);
    }
    const KnnPrecisionRecall nn = knn_precision_recall(
        input.real_features, input.recon_features, options.knn_k);
    group.gp_nn = nn.gp_nn;
    group.gr_nn = nn.gr_nn;
    if (!input.paired_images.empty()) {
      const GroupPsnrResult psnr =
          group_psnr(input.paired_images, input.image_peak);
      group.gpsnr_db = psnr.mean_db;
      group.gpsnr_excluded_pairs = psnr.excluded_pairs;
    }
    for (const auto& [name, values] : input.paired_scalars) {
      group.paired_means[name] = paired_scalar_group_mean(values);
    }
    report.groups.push_back(std::move(group));
  }

  for (GpiDivergence d : divergences) {
    const std::string name(divergence_name(d));
    std::map<std::string, double> per_group;
    for (const GroupReport& group : report.groups) {
      per_group[group.group] = group.gpi.at(name);
    }
    report.disparity[name] = pf_disparity(per_group);
  }
  return report;
}

}  // namespace pf
