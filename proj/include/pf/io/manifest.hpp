#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pf/fairness/fairness.hpp"

namespace pf {

//! Directories of paired ground-truth / reconstruction rasters. Each
//! directory holds one file per image in the feature-file format (CSV or
//! PFF1); files are paired by name, so both directories must contain exactly
//! the same set of file names, and paired rasters must have equal shapes.
//! Pixel values are interpreted on a [0, peak] scale for PSNR.
struct PairedImagesSpec {
  std::filesystem::path real_dir;
  std::filesystem::path recon_dir;
  double peak = 1.0;
};

//! One group entry of an evaluation manifest, with every referenced file
//! resolved to a loadable path.
struct ManifestGroup {
  std::string id;
  std::filesystem::path real_features;
  std::filesystem::path recon_features;
  std::optional<std::filesystem::path> labels;
  std::map<std::string, std::filesystem::path> paired_scalars;
  std::optional<PairedImagesSpec> paired_images;
};

//! Parsed evaluation manifest.
//!
//! On disk a manifest is a JSON document:
//!
//!   {
//!     "groups": [
//!       {
//!         "id": "dogs",
//!         "real_features": "dogs_real.csv",
//!         "recon_features": "dogs_recon.pff",
//!         "labels": "dogs_labels.txt",                      // optional
//!         "paired_scalars": {"lpips": "dogs_lpips.txt"},    // optional
//!         "paired_images": {                                 // optional
//!           "real_dir": "dogs/real",
//!           "recon_dir": "dogs/recon",
//!           "peak": 255.0                                    // optional, default 1.0
//!         }
//!       },
//!       ...
//!     ],
//!     "metrics": ["kid", "w1"],   // optional, default all four
//!     "knn_k": 3,                 // optional, default 3
//!     "output": "report.json"
//!   }
//!
//! Relative paths are resolved against the manifest file's directory.
struct Manifest {
  std::vector<ManifestGroup> groups;
  std::vector<GpiDivergence> metrics;
  std::size_t knn_k = 3;
  std::filesystem::path output;
};

//! Parses and validates a manifest file (>= 2 groups, unique ids, required
//! keys present, known metric names, knn_k >= 1). Throws std::runtime_error
//! with the offending path / key on any problem.
Manifest load_manifest(const std::filesystem::path& path);

//! Divergence lookup accepting both the canonical report names and the
//! short command-line aliases "tv" (-> tv_kde_1d) and "w1" (-> w1_1d).
GpiDivergence divergence_from_cli_name(std::string_view name);

//! Loads the paired rasters described by two directories (see
//! PairedImagesSpec). Each raster is flattened row-major into the pixel
//! vector of an ImagePair; pairs are ordered by file name. Errors name the
//! missing or mismatched file.
std::vector<ImagePair> load_image_pairs(const std::filesystem::path& real_dir,
                                        const std::filesystem::path& recon_dir);

//! Loads every file referenced by one manifest group.
GroupEvaluationInput load_group_input(const ManifestGroup& group);

//! Loads all groups and runs the fairness evaluation. Any load error aborts
//! with the offending path; nothing is written (the caller owns the output).
FairnessReport evaluate_manifest(const Manifest& manifest);

}  // namespace pf
