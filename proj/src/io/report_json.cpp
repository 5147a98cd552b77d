#include "pf/io/report_json.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace pf {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kReportVersion = "pf-report-v1";
constexpr const char* kToyVersion = "pf-toy-v1";

[[noreturn]] void malformed(const std::string& message) {
  throw std::runtime_error("report JSON: " + message);
}

const ordered_json& require(const ordered_json& node, const char* key) {
  const auto it = node.find(key);
  if (it == node.end()) malformed(std::string("missing key '") + key + "'");
  return *it;
}

double require_number(const ordered_json& node, const char* key) {
  const ordered_json& value = require(node, key);
  if (!value.is_number()) malformed(std::string("'") + key + "' must be a number");
  return value.get<double>();
}

ordered_json group_to_json(const GroupReport& group) {
  ordered_json node;
  ordered_json gpi = ordered_json::object();
  for (const auto& [metric, value] : group.gpi) gpi[metric] = value;
  node["gpi"] = std::move(gpi);
  node["gp_hit_rate"] =
      group.gp_hit_rate ? ordered_json(*group.gp_hit_rate) : ordered_json();
  node["gp_nn"] = group.gp_nn;
  node["gr_nn"] = group.gr_nn;
  if (group.gpsnr_db || group.gpsnr_excluded_pairs > 0) {
    ordered_json gpsnr;
    gpsnr["mean_db"] =
        group.gpsnr_db ? ordered_json(*group.gpsnr_db) : ordered_json();
    gpsnr["excluded_pairs"] = group.gpsnr_excluded_pairs;
    node["gpsnr"] = std::move(gpsnr);
  } else {
    node["gpsnr"] = nullptr;
  }
  ordered_json means = ordered_json::object();
  for (const auto& [name, value] : group.paired_means) means[name] = value;
  node["paired_means"] = std::move(means);
  return node;
}

GroupReport group_from_json(const std::string& id, const ordered_json& node) {
  GroupReport group;
  group.group = id;
  const ordered_json& gpi = require(node, "gpi");
  if (!gpi.is_object()) malformed("'gpi' must be an object");
  for (const auto& [metric, value] : gpi.items()) {
    if (!value.is_number()) malformed("gpi['" + metric + "'] must be a number");
    group.gpi[metric] = value.get<double>();
  }
  if (const auto it = group.gpi.find("kid"); it != group.gpi.end()) {
    group.kid_negative = it->second < 0.0;
  }
  const ordered_json& hit = require(node, "gp_hit_rate");
  if (!hit.is_null()) group.gp_hit_rate = hit.get<double>();
  group.gp_nn = require_number(node, "gp_nn");
  group.gr_nn = require_number(node, "gr_nn");
  const ordered_json& gpsnr = require(node, "gpsnr");
  if (!gpsnr.is_null()) {
    const ordered_json& mean = require(gpsnr, "mean_db");
    if (!mean.is_null()) group.gpsnr_db = mean.get<double>();
    group.gpsnr_excluded_pairs =
        require(gpsnr, "excluded_pairs").get<std::size_t>();
  }
  const ordered_json& means = require(node, "paired_means");
  if (!means.is_object()) malformed("'paired_means' must be an object");
  for (const auto& [name, value] : means.items()) {
    group.paired_means[name] = value.get<double>();
  }
  return group;
}

ordered_json warnings_for(const FairnessReport& report) {
  ordered_json warnings = ordered_json::array();
  for (const GroupReport& group : report.groups) {
    if (group.kid_negative) {
      warnings.push_back("group '" + group.group +
                         "': negative KID estimate (small-sample unbiased "
                         "estimator); reported as-is");
    }
    if (group.gpsnr_excluded_pairs > 0) {
      warnings.push_back("group '" + group.group + "': " +
                         std::to_string(group.gpsnr_excluded_pairs) +
                         " identical image pair(s) excluded from GPSNR");
    }
  }
  return warnings;
}

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::logic_error("to_chars failed");
  return std::string(buffer, ptr);
}

}  // namespace

std::string report_to_json(const FairnessReport& report) {
  ordered_json doc;
  doc["version"] = kReportVersion;
  ordered_json per_group = ordered_json::object();
  for (const GroupReport& group : report.groups) {
    per_group[group.group] = group_to_json(group);
  }
  doc["per_group"] = std::move(per_group);
  ordered_json disparity = ordered_json::object();
  for (const auto& [metric, summary] : report.disparity) {
    ordered_json node;
    node["gap"] = summary.gap;
    node["ratio"] = summary.ratio ? ordered_json(*summary.ratio) : ordered_json();
    node["worst"] = summary.worst;
    disparity[metric] = std::move(node);
  }
  doc["disparity"] = std::move(disparity);
  doc["warnings"] = warnings_for(report);
  return doc.dump(2) + "\n";
}

FairnessReport report_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("document must be an object");
  const ordered_json& version = require(doc, "version");
  if (!version.is_string() || version.get<std::string>() != kReportVersion) {
    malformed("unsupported version");
  }
  FairnessReport report;
  const ordered_json& per_group = require(doc, "per_group");
  if (!per_group.is_object()) malformed("'per_group' must be an object");
  for (const auto& [id, node] : per_group.items()) {
    report.groups.push_back(group_from_json(id, node));
  }
  const ordered_json& disparity = require(doc, "disparity");
  if (!disparity.is_object()) malformed("'disparity' must be an object");
  for (const auto& [metric, node] : disparity.items()) {
    DisparitySummary summary;
    summary.gap = require_number(node, "gap");
    const ordered_json& ratio = require(node, "ratio");
    if (!ratio.is_null()) summary.ratio = ratio.get<double>();
    summary.worst = require(node, "worst").get<std::string>();
    report.disparity.emplace(metric, std::move(summary));
  }
  return report;
}

std::string toy_result_to_json(const ToyResult& result,
                               const ToyConfig& config) {
  ordered_json doc;
  doc["version"] = kToyVersion;
  doc["n_samples"] = config.n_samples;
  doc["seed"] = config.seed;
  doc["bw_adjust"] = config.bw_adjust;
  doc["p_a0"] = result.p_a0;
  doc["group_counts"] =
      ordered_json::array({result.group_counts[0], result.group_counts[1]});
  ordered_json estimators = ordered_json::array();
  for (const ToyEstimatorResult& est : result.estimators) {
    ordered_json node;
    node["estimator"] = std::string(toy_estimator_name(est.estimator));
    ordered_json groups = ordered_json::array();
    for (std::size_t a = 0; a < est.groups.size(); ++a) {
      ordered_json g;
      g["group"] = a;
      g["gpi_tv"] = est.groups[a].gpi_tv;
      g["gpi_w1"] = est.groups[a].gpi_w1;
      groups.push_back(std::move(g));
    }
    node["groups"] = std::move(groups);
    estimators.push_back(std::move(node));
  }
  doc["estimators"] = std::move(estimators);
  return doc.dump(2) + "\n";
}

std::string toy_result_to_csv(const ToyResult& result) {
  std::string csv = "estimator,group,gpi_tv,gpi_w1\n";
  for (const ToyEstimatorResult& est : result.estimators) {
    for (std::size_t a = 0; a < est.groups.size(); ++a) {
      csv += std::string(toy_estimator_name(est.estimator));
      csv += ',';
      csv += std::to_string(a);
      csv += ',';
      csv += format_double(est.groups[a].gpi_tv);
      csv += ',';
      csv += format_double(est.groups[a].gpi_w1);
      csv += '\n';
    }
  }
  return csv;
}

}  // namespace pf
