#pragma once

#include <string>

#include "pf/fairness/fairness.hpp"
#include "pf/toy/toy.hpp"

namespace pf {

//! Serializes a fairness report as a JSON document:
//!
//!   {
//!     "version": "pf-report-v1",
//!     "per_group": {
//!       "<group id>": {                 // one entry per group, input order
//!         "gpi": {"<metric>": value, ...},
//!         "gp_hit_rate": number | null, // null when no labels were supplied
//!         "gp_nn": number,
//!         "gr_nn": number,
//!         "gpsnr": null                 // null when no image pairs
//!                | {"mean_db": number | null, "excluded_pairs": count},
//!         "paired_means": {"<scalar>": value, ...}
//!       }, ...
//!     },
//!     "disparity": {
//!       "<metric>": {"gap": number, "ratio": number | null, "worst": id}, ...
//!     },
//!     "warnings": [string, ...]         // derived from the data, may be empty
//!   }
//!
//! Numbers carry full double precision (shortest representation that parses
//! back to the same value), so serialize -> parse -> serialize is
//! byte-identical. The warnings array is derived deterministically from the
//! report itself (negative KID estimates, GPSNR exclusions) and is therefore
//! not stored on the parsed struct beyond the fields it reflects.
std::string report_to_json(const FairnessReport& report);

//! Inverse of report_to_json. Throws std::runtime_error on malformed input
//! or an unsupported version.
FairnessReport report_from_json(const std::string& text);

//! Serializes a toy-benchmark run (with the configuration that produced it):
//!
//!   {
//!     "version": "pf-toy-v1",
//!     "n_samples": N, "seed": S, "bw_adjust": B,
//!     "p_a0": number,
//!     "group_counts": [n0, n1],
//!     "estimators": [
//!       {"estimator": name,
//!        "groups": [{"group": 0, "gpi_tv": v, "gpi_w1": v},
//!                   {"group": 1, "gpi_tv": v, "gpi_w1": v}]}, ...
//!     ]
//!   }
std::string toy_result_to_json(const ToyResult& result, const ToyConfig& config);

//! Plot-ready CSV: header "estimator,group,gpi_tv,gpi_w1", one row per
//! estimator x group, numbers in shortest round-trip form.
std::string toy_result_to_csv(const ToyResult& result);

}  // namespace pf
