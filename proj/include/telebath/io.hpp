#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "telebath/states.hpp"
#include "telebath/teleport.hpp"

namespace telebath {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "telebath 1.0.0";

/// Complete description of one driver run.  Serializable to/from JSON;
/// command-line flags override individual fields.
struct RunConfig {
  int n = 22;
  double ka = 1.0 / std::numbers::sqrt2;
  double kA = -1.0 / std::numbers::sqrt2;
  BathModel bath = BathModel::Unpolarized;
  BellLabel shared = BellLabel::S0;
  double r = 1.0;
  AveragingMode mode = AveragingMode::ProbabilityWeighted;
  double t_start = 0.0;  ///< dimensionless Kt
  double t_stop = 3.0;
  int t_count = 301;
  std::optional<BlochVector> input;  ///< nullopt = sphere-average
  std::string out = "out.csv";
  std::uint64_t seed = 12345;

  // sweep ranges (cmd_sweep only)
  std::vector<double> sweep_deltas = {-1.0, 0.0, 0.5, 1.0};
  std::vector<double> sweep_rs = {0.0, 0.5, 1.0};
  std::vector<BellLabel> sweep_labels{kBellLabels.begin(), kBellLabels.end()};
  std::vector<AveragingMode> sweep_modes = {AveragingMode::ProbabilityWeighted};

  /// Strictly increasing Kt grid with t_count >= 2 points; throws
  /// std::invalid_argument if the grid invariants are violated.
  std::vector<double> time_grid() const;

  std::string to_json() const;
  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_json_file(const std::string& path);
};

/// Locale-independent shortest-round-trip decimal rendering.
std::string format_double(double value);

/// A rectangular CSV table: mandatory header, '.' decimal separator,
/// cells pre-rendered (use format_double for numbers).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
};

/// Write `text` to `path`, creating parent directories; throws
/// std::runtime_error with the path on failure.
void write_file(const std::string& path, const std::string& text);

/// Path of the JSON sidecar for a CSV output: extension replaced by
/// ".json".
std::string sidecar_path(const std::string& csv_path);

}  // namespace telebath
