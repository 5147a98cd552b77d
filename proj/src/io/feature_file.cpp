#include "pf/io/feature_file.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace pf {

namespace {

constexpr char kMagic[4] = {'P', 'F', 'F', '1'};

[[noreturn]] void fail(const std::filesystem::path& path,
                       const std::string& message) {
  throw std::runtime_error(path.string() + ": " + message);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(path, "read failed");
  return std::move(buffer).str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

//! Splits into lines on '\n'; the empty segment after a final newline is
//! dropped (a trailing newline is not a blank line).
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !token.empty();
}

std::uint32_t read_u32_le(const unsigned char* bytes) {
  return static_cast<std::uint32_t>(bytes[0]) |
         static_cast<std::uint32_t>(bytes[1]) << 8 |
         static_cast<std::uint32_t>(bytes[2]) << 16 |
         static_cast<std::uint32_t>(bytes[3]) << 24;
}

FeatureSet parse_binary(const std::filesystem::path& path,
                        const std::string& raw) {
  if (raw.size() < 12) fail(path, "truncated header: need 12 bytes before the payload");
  const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
  const std::uint32_t rows = read_u32_le(bytes + 4);
  const std::uint32_t dim = read_u32_le(bytes + 8);
  if (rows == 0) fail(path, "declared row count is 0");
  if (dim == 0) fail(path, "declared dimension is 0");
  const std::uint64_t expected =
      static_cast<std::uint64_t>(rows) * dim * sizeof(float);
  const std::uint64_t payload = raw.size() - 12;
  if (payload < expected) {
    fail(path, "truncated payload: expected " + std::to_string(expected) +
                   " bytes for " + std::to_string(rows) + "x" +
                   std::to_string(dim) + ", found " + std::to_string(payload));
  }
  if (payload > expected) {
    fail(path, "trailing data: expected exactly " + std::to_string(expected) +
                   " payload bytes, found " + std::to_string(payload));
  }
  std::vector<double> data(static_cast<std::size_t>(rows) * dim);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::uint32_t bits = read_u32_le(bytes + 12 + 4 * i);
    const double value = static_cast<double>(std::bit_cast<float>(bits));
    if (!std::isfinite(value)) {
      fail(path, "non-finite value at row " + std::to_string(i / dim + 1) +
                     ", column " + std::to_string(i % dim + 1));
    }
    data[i] = value;
  }
  return FeatureSet(rows, dim, std::move(data));
}

FeatureSet parse_csv(const std::filesystem::path& path,
                     const std::string& raw) {
  const std::vector<std::string_view> lines = split_lines(raw);

  std::vector<double> data;
  std::size_t dim = 0;
  std::size_t rows = 0;
  bool header_allowed = true;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view line = lines[li];
    if (trim(line).empty()) {
      fail(path, "blank line at line " + std::to_string(li + 1));
    }
    std::vector<double> row;
    bool parsed = true;
    std::size_t start = 0;
    std::size_t column = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view token =
          trim(comma == std::string_view::npos
                   ? line.substr(start)
                   : line.substr(start, comma - start));
      ++column;
      double value = 0.0;
      if (!parse_double(token, value)) {
        if (header_allowed) {
          parsed = false;  // a single leading header line is tolerated
          break;
        }
        fail(path, "line " + std::to_string(li + 1) + ": cannot parse '" +
                       std::string(token) + "' as a number");
      }
      if (!std::isfinite(value)) {
        fail(path, "non-finite value at row " + std::to_string(rows + 1) +
                       ", column " + std::to_string(column));
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    header_allowed = false;
    if (!parsed) continue;
    if (rows == 0) {
      dim = row.size();
    } else if (row.size() != dim) {
      fail(path, "line " + std::to_string(li + 1) + ": found " +
                     std::to_string(row.size()) + " columns, expected " +
                     std::to_string(dim));
    }
    data.insert(data.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) fail(path, "no data rows");
  return FeatureSet(rows, dim, std::move(data));
}

//! Shortest decimal form that parses back to the same double.
std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::logic_error("to_chars failed");
  return std::string(buffer, ptr);
}

std::vector<std::string_view> scalar_lines(const std::filesystem::path& path,
                                           const std::string& raw) {
  const std::vector<std::string_view> lines = split_lines(raw);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) {
      fail(path, "blank line at line " + std::to_string(li + 1));
    }
  }
  if (lines.empty()) fail(path, "empty file");
  return lines;
}

}  // namespace

FeatureSet load_features(const std::filesystem::path& path) {
  const std::string raw = read_file(path);
  if (raw.size() >= 4 && std::memcmp(raw.data(), kMagic, 4) == 0) {
    return parse_binary(path, raw);
  }
  return parse_csv(path, raw);
}

void write_features_csv(const std::filesystem::path& path,
                        const FeatureSet& features) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open file for writing");
  for (std::size_t r = 0; r < features.rows(); ++r) {
    const auto row = features.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
  if (!out.flush()) fail(path, "write failed");
}

void write_features_binary(const std::filesystem::path& path,
                           const FeatureSet& features) {
  if (features.rows() > UINT32_MAX || features.dim() > UINT32_MAX) {
    fail(path, "matrix too large for the binary format");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open file for writing");
  auto put_u32 = [&out](std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v & 0xff),
                           static_cast<char>(v >> 8 & 0xff),
                           static_cast<char>(v >> 16 & 0xff),
                           static_cast<char>(v >> 24 & 0xff)};
    out.write(bytes, 4);
  };
  out.write(kMagic, 4);
  put_u32(static_cast<std::uint32_t>(features.rows()));
  put_u32(static_cast<std::uint32_t>(features.dim()));
  for (double value : features.data()) {
    const std::uint32_t bits =
        std::bit_cast<std::uint32_t>(static_cast<float>(value));
    put_u32(bits);
  }
  if (!out.flush()) fail(path, "write failed");
}

std::vector<std::string> load_labels(const std::filesystem::path& path) {
  const std::string raw = read_file(path);
  std::vector<std::string> labels;
  for (std::string_view line : scalar_lines(path, raw)) {
    labels.emplace_back(trim(line));
  }
  return labels;
}

std::vector<double> load_scalars(const std::filesystem::path& path) {
  const std::string raw = read_file(path);
  std::vector<double> values;
  std::size_t li = 0;
  for (std::string_view line : scalar_lines(path, raw)) {
    ++li;
    double value = 0.0;
    if (!parse_double(trim(line), value)) {
      fail(path, "line " + std::to_string(li) + ": cannot parse '" +
                     std::string(trim(line)) + "' as a number");
    }
    if (!std::isfinite(value)) {
      fail(path, "non-finite value at line " + std::to_string(li));
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace pf
