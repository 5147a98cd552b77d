#include "pf/io/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "pf/io/feature_file.hpp"

namespace pf {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::filesystem::path& path,
                       const std::string& message) {
  throw std::runtime_error(path.string() + ": " + message);
}

json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path, std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

const json& require_key(const std::filesystem::path& path, const json& node,
                        const std::string& key, const std::string& where) {
  const auto it = node.find(key);
  if (it == node.end()) fail(path, where + ": missing required key '" + key + "'");
  return *it;
}

std::string require_string(const std::filesystem::path& path, const json& node,
                           const std::string& key, const std::string& where) {
  const json& value = require_key(path, node, key, where);
  if (!value.is_string()) fail(path, where + ": '" + key + "' must be a string");
  return value.get<std::string>();
}

//! Relative manifest entries are relative to the manifest file itself.
std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::filesystem::path& entry) {
  return entry.is_absolute() ? entry : base / entry;
}

ManifestGroup parse_group(const std::filesystem::path& path,
                          const std::filesystem::path& base,
                          const json& node, std::size_t index) {
  const std::string where = "groups[" + std::to_string(index) + "]";
  if (!node.is_object()) fail(path, where + ": must be an object");
  ManifestGroup group;
  group.id = require_string(path, node, "id", where);
  if (group.id.empty()) fail(path, where + ": 'id' must be nonempty");
  group.real_features =
      resolve(base, require_string(path, node, "real_features", where));
  group.recon_features =
      resolve(base, require_string(path, node, "recon_features", where));
  if (node.contains("labels")) {
    group.labels = resolve(base, require_string(path, node, "labels", where));
  }
  if (const auto it = node.find("paired_scalars"); it != node.end()) {
    if (!it->is_object()) {
      fail(path, where + ": 'paired_scalars' must be an object of paths");
    }
    for (const auto& [name, value] : it->items()) {
      if (!value.is_string()) {
        fail(path, where + ": paired_scalars['" + name + "'] must be a string");
      }
      group.paired_scalars.emplace(name,
                                   resolve(base, value.get<std::string>()));
    }
  }
  if (const auto it = node.find("paired_images"); it != node.end()) {
    if (!it->is_object()) fail(path, where + ": 'paired_images' must be an object");
    PairedImagesSpec spec;
    spec.real_dir =
        resolve(base, require_string(path, *it, "real_dir", where));
    spec.recon_dir =
        resolve(base, require_string(path, *it, "recon_dir", where));
    if (const auto peak = it->find("peak"); peak != it->end()) {
      if (!peak->is_number()) fail(path, where + ": 'peak' must be a number");
      spec.peak = peak->get<double>();
      if (!(spec.peak > 0.0)) fail(path, where + ": 'peak' must be positive");
    }
    group.paired_images = std::move(spec);
  }
  return group;
}

}  // namespace

GpiDivergence divergence_from_cli_name(std::string_view name) {
  if (name == "tv") return GpiDivergence::tv_kde_1d;
  if (name == "w1") return GpiDivergence::w1_1d;
  return divergence_from_name(name);
}

Manifest load_manifest(const std::filesystem::path& path) {
  const json doc = parse_json_file(path);
  if (!doc.is_object()) fail(path, "manifest must be a JSON object");
  const std::filesystem::path base = path.parent_path();

  Manifest manifest;
  const json& groups = require_key(path, doc, "groups", "manifest");
  if (!groups.is_array()) fail(path, "'groups' must be an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    ManifestGroup group = parse_group(path, base, groups[i], i);
    if (!ids.insert(group.id).second) {
      fail(path, "duplicate group id '" + group.id + "'");
    }
    manifest.groups.push_back(std::move(group));
  }
  if (manifest.groups.size() < 2) fail(path, "manifest needs at least 2 groups");

  if (const auto it = doc.find("metrics"); it != doc.end()) {
    if (!it->is_array()) fail(path, "'metrics' must be an array of names");
    for (const json& name : *it) {
      if (!name.is_string()) fail(path, "'metrics' entries must be strings");
      try {
        manifest.metrics.push_back(
            divergence_from_cli_name(name.get<std::string>()));
      } catch (const std::invalid_argument&) {
        fail(path, "unknown metric '" + name.get<std::string>() + "'");
      }
    }
    if (manifest.metrics.empty()) fail(path, "'metrics' must be nonempty");
  } else {
    manifest.metrics = {GpiDivergence::kid, GpiDivergence::fid,
                        GpiDivergence::tv_kde_1d, GpiDivergence::w1_1d};
  }

  if (const auto it = doc.find("knn_k"); it != doc.end()) {
    if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) {
      fail(path, "'knn_k' must be a positive integer");
    }
    manifest.knn_k = it->get<std::size_t>();
  }

  manifest.output = resolve(base, require_string(path, doc, "output", "manifest"));
  return manifest;
}

std::vector<ImagePair> load_image_pairs(
    const std::filesystem::path& real_dir,
    const std::filesystem::path& recon_dir) {
  auto list_dir = [](const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) fail(dir, "not a directory");
    std::vector<std::string> names;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file()) {
        names.push_back(entry.path().filename().string());
      }
    }
    std::sort(names.begin(), names.end());
    return names;
  };

  const std::vector<std::string> real_names = list_dir(real_dir);
  const std::vector<std::string> recon_names = list_dir(recon_dir);
  for (const std::string& name : real_names) {
    if (!std::binary_search(recon_names.begin(), recon_names.end(), name)) {
      fail(recon_dir / name, "missing reconstruction for paired image");
    }
  }
  for (const std::string& name : recon_names) {
    if (!std::binary_search(real_names.begin(), real_names.end(), name)) {
      fail(real_dir / name, "missing ground truth for paired image");
    }
  }

  std::vector<ImagePair> pairs;
  pairs.reserve(real_names.size());
  for (const std::string& name : real_names) {
    const FeatureSet real = load_features(real_dir / name);
    const FeatureSet recon = load_features(recon_dir / name);
    if (real.rows() != recon.rows() || real.dim() != recon.dim()) {
      fail(recon_dir / name, "raster shape differs from its ground truth (" +
                                 std::to_string(recon.rows()) + "x" +
                                 std::to_string(recon.dim()) + " vs " +
                                 std::to_string(real.rows()) + "x" +
                                 std::to_string(real.dim()) + ")");
    }
    ImagePair pair;
    pair.real.assign(real.data().begin(), real.data().end());
    pair.recon.assign(recon.data().begin(), recon.data().end());
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

GroupEvaluationInput load_group_input(const ManifestGroup& group) {
  GroupEvaluationInput input{.group = group.id,
                             .real_features = load_features(group.real_features),
                             .recon_features = load_features(group.recon_features),
                             .labels = {},
                             .paired_scalars = {},
                             .paired_images = {},
                             .image_peak = 1.0};
  if (group.labels) input.labels = load_labels(*group.labels);
  for (const auto& [name, path] : group.paired_scalars) {
    input.paired_scalars.emplace(name, load_scalars(path));
  }
  if (group.paired_images) {
    input.paired_images =
        load_image_pairs(group.paired_images->real_dir,
                         group.paired_images->recon_dir);
    input.image_peak = group.paired_images->peak;
  }
  return input;
}

FairnessReport evaluate_manifest(const Manifest& manifest) {
  std::vector<GroupEvaluationInput> inputs;
  inputs.reserve(manifest.groups.size());
  for (const ManifestGroup& group : manifest.groups) {
    inputs.push_back(load_group_input(group));
  }
  EvaluationOptions options;
  options.divergences = manifest.metrics;
  options.knn_k = manifest.knn_k;
  return evaluate_groups(inputs, options);
}

}  // namespace pf
