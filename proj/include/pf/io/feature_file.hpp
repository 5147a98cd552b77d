#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pf/div/feature_set.hpp"

namespace pf {

//! Feature matrices travel in one of two self-describing formats:
//!
//!   * CSV: one row per sample, one comma-separated column per feature
//!     dimension, an optional single header line, values in any textual
//!     form std::from_chars accepts. Written with shortest round-trip
//!     formatting, so doubles survive a write/load cycle bitwise.
//!   * Binary ("PFF1"): the magic bytes "PFF1", an unsigned 32-bit
//!     little-endian row count, an unsigned 32-bit little-endian dimension,
//!     then row-major IEEE-754 binary32 little-endian values. The payload
//!     length must match rows * dim * 4 exactly.
//!
//! The format is detected by the magic bytes; anything else parses as CSV.
//! All load errors carry the offending path (and row/column where it
//! applies) in the exception message.

//! Loads a feature matrix in either format. Throws std::runtime_error on
//! malformed input (truncated payload, ragged rows, unparseable or
//! non-finite values, zero rows or dimension).
FeatureSet load_features(const std::filesystem::path& path);

//! Writes CSV with shortest round-trip number formatting and no header.
void write_features_csv(const std::filesystem::path& path,
                        const FeatureSet& features);

//! Writes the binary format. Values are narrowed to binary32; callers that
//! need lossless doubles should write CSV instead.
void write_features_binary(const std::filesystem::path& path,
                           const FeatureSet& features);

//! Loads one trimmed label per line. A trailing newline is tolerated; a
//! blank line anywhere else is an error naming the line number, as is an
//! empty file.
std::vector<std::string> load_labels(const std::filesystem::path& path);

//! Loads one finite scalar per line, with the same line discipline as
//! load_labels.
std::vector<double> load_scalars(const std::filesystem::path& path);

}  // namespace pf
