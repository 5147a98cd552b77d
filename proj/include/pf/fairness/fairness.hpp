#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pf/div/feature_set.hpp"

namespace pf {

//! Distribution distances available for group perceptual indices. The 1-D
//! variants require feature dimension 1.
enum class GpiDivergence { kid, fid, tv_kde_1d, w1_1d };

//! Stable lowercase name ("kid", "fid", "tv_kde_1d", "w1_1d"); used as the
//! metric key in reports.
std::string_view divergence_name(GpiDivergence d);

//! Inverse of divergence_name. Throws std::invalid_argument on unknown names.
GpiDivergence divergence_from_name(std::string_view name);

//! One (ground truth, reconstruction) pixel-array pair. The two arrays must
//! have the same length; values are interpreted on a [0, peak] scale.
struct ImagePair {
  std::vector<double> real;
  std::vector<double> recon;
};

//! Everything known about one group's reconstructions. Feature rows are
//! samples of the group's ground-truth and reconstruction distributions.
//! `labels`, `paired_scalars`, and `paired_images` are optional extras: an
//! empty container means the input was not supplied.
struct GroupEvaluationInput {
  std::string group;
  FeatureSet real_features;
  FeatureSet recon_features;
  //! Predicted group id per reconstruction (classifier output). When
  //! nonempty its length must equal recon_features.rows().
  std::vector<std::string> labels;
  //! Named per-pair scalar metrics (e.g. precomputed perceptual distances);
  //! each vector's length must equal recon_features.rows().
  std::map<std::string, std::vector<double>> paired_scalars;
  std::vector<ImagePair> paired_images;
  //! Peak pixel value for PSNR when paired_images is nonempty.
  double image_peak = 1.0;
};

//! Group perceptual index: the chosen distance between the group's
//! ground-truth feature distribution and its reconstruction feature
//! distribution. KID may legitimately be negative (unbiased estimator);
//! the value is returned as-is. Errors from the underlying divergence
//! (sample-count minima, dimension mismatches) propagate.
double gpi(const GroupEvaluationInput& input, GpiDivergence divergence);

//! Fraction of labels equal to `group`. Throws on empty labels.
double group_precision_hit_rate(std::span<const std::string> labels,
                                std::string_view group);

struct KnnPrecisionRecall {
  double gp_nn;
  double gr_nn;
};

//! Two-sample k-NN precision/recall in feature space. A point is covered
//! when it lies within (<=, ties inclusive) the distance-to-kth-neighbor
//! ball of at least one point of the other set, the radius computed within
//! that set with the point itself excluded. gp_nn covers reconstruction
//! points with real balls; gr_nn swaps the roles. Requires >= k+1 points in
//! both sets and equal dimensions. Distances are Euclidean.
KnnPrecisionRecall knn_precision_recall(const FeatureSet& real,
                                        const FeatureSet& recon,
                                        std::size_t k = 3);

struct GroupPsnrResult {
  //! Mean PSNR in dB over the finite pairs; empty when every pair was
  //! excluded.
  std::optional<double> mean_db;
  //! Identical pairs (zero MSE, infinite PSNR): excluded from the mean with
  //! a warning on stderr rather than capped, which would distort group
  //! comparisons.
  std::size_t excluded_pairs = 0;
};

//! Mean over pairs of 10 * log10(peak^2 / MSE(pair)).
GroupPsnrResult group_psnr(std::span<const ImagePair> pairs, double peak);

//! Arithmetic mean of a nonempty per-pair scalar sequence.
double paired_scalar_group_mean(std::span<const double> values);

//! Parity summary of a per-group quantity. The paper-level notion of "good"
//! group parity has no canonical scalar; the additive gap and multiplicative
//! ratio are this library's conventions.
struct DisparitySummary {
  //! max - min, exactly.
  double gap;
  //! max / min; empty (undefined) unless min > 0.
  std::optional<double> ratio;
  //! Group attaining the max, ties broken by lexicographically smallest id.
  std::string worst;
};

//! Requires >= 2 groups.
DisparitySummary pf_disparity(const std::map<std::string, double>& per_group);

//! Per-group slice of a FairnessReport.
struct GroupReport {
  std::string group;
  //! Divergence name -> GPI value, for each requested divergence.
  std::map<std::string, double> gpi;
  //! Set when the KID GPI came out negative (reported as-is, flagged).
  bool kid_negative = false;
  //! Present only when classifier labels were supplied.
  std::optional<double> gp_hit_rate;
  double gp_nn = 0.0;
  double gr_nn = 0.0;
  //! Present only when image pairs were supplied and at least one pair had
  //! finite PSNR.
  std::optional<double> gpsnr_db;
  std::size_t gpsnr_excluded_pairs = 0;
  //! Scalar name -> group mean, for each supplied paired scalar.
  std::map<std::string, double> paired_means;
};

struct FairnessReport {
  //! One entry per input group, in input order.
  std::vector<GroupReport> groups;
  //! Divergence name -> parity summary of the groups' GPIs.
  std::map<std::string, DisparitySummary> disparity;
};

struct EvaluationOptions {
  //! Divergences to evaluate per group (duplicates are ignored).
  std::vector<GpiDivergence> divergences;
  std::size_t knn_k = 3;
};

//! Evaluates every group and assembles the report. Requires >= 2 groups
//! with unique ids. Deterministic: groups are processed and reported in
//! input order.
FairnessReport evaluate_groups(std::span<const GroupEvaluationInput> inputs,
                               const EvaluationOptions& options);

}  // namespace pf
