#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qfchub/dwdm.hpp"
#include "qfchub/io.hpp"
#include "qfchub/tunability.hpp"

namespace qfchub::cli {

inline constexpr const char* kConfigEnvVar = "QFCHUB_CONFIG";

/// Everything a subcommand may read. Defaults match config/default.json.
struct RunConfig {
  std::string material = "jundt1997";
  std::string materials_file;  // empty: bundled models
  double temperature_c = kDefaultTemperatureC;
  double length_mm = 40.0;
  TuningConstraints tuning;
  DwdmGrid grid;
  LaserSpec laser;
  double signal_thz = 384.200;
  io::Format format = io::Format::kCsv;
  std::string output;  // empty: stdout
  int workers = 0;

  /// Throws DomainError on non-physical values.
  void validate() const;
  SellmeierModel resolve_material() const;
};

/// Overlays the keys present in `j` onto `config`. Unknown keys are rejected.
void apply_json(RunConfig& config, const nlohmann::json& j);

/// Explicit path, else $QFCHUB_CONFIG, else built-in defaults. JSON may
/// contain // comments.
RunConfig load_config(const std::optional<std::string>& path);

nlohmann::json to_json(const RunConfig& config);

}  // namespace qfchub::cli
