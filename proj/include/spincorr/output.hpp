#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace spincorr {

/// One emitted result row. `command` is the full normalized CLI invocation
/// (defaults materialized), so re-running it reproduces the row bit for bit.
/// z_score is present exactly when both an analytic reference and a standard
/// error are.
struct OutputRecord {
  std::string command;
  std::string model;
  std::optional<double> theta_deg;
  std::string quantity;
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<double> analytic;
  std::optional<double> z_score;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

/// Sets the analytic reference and the implied z-score.
void attach_reference(OutputRecord& record, double analytic);

/// Ordered CSV schema shared by every command.
std::string csv_header();
std::string to_csv_row(const OutputRecord& record);
std::string to_csv(const std::vector<OutputRecord>& records);

/// JSON mirror: an array of objects with the same keys as the CSV columns.
nlohmann::json to_json(const std::vector<OutputRecord>& records);

/// Serializes a double exactly as the JSON emitter does, so CSV and JSON
/// carry identical values.
std::string format_double(double v);

}  // namespace spincorr
