#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfchub/dwdm.hpp"
#include "qfchub/efficiency.hpp"
#include "qfchub/tunability.hpp"

namespace qfchub::io {

inline constexpr int kSchemaVersion = 1;

enum class Format { kCsv, kJson };

/// Parses "csv" or "json"; throws DomainError otherwise.
Format parse_format(const std::string& name);

/// One table cell: the typed JSON value and its fixed-precision CSV text.
struct Cell {
  nlohmann::json value;
  std::string text;
};

Cell number(double v, int decimals);
Cell integer(long v);
Cell text(const std::string& s);
Cell flag(bool b);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Extra top-level JSON fields; CSV ignores them.
  nlohmann::json meta = nlohmann::json::object();

  void add_row(std::vector<Cell> row);
};

/// CSV starts with "# schema=1"; JSON is {"schema":1, ...meta, "rows":[{...}]}.
void write_table(const Table& table, Format format, std::ostream& out);
std::string render_table(const Table& table, Format format);

Table tuning_table(const std::vector<HubSweepPoint>& sweep);
Table spectrum_table(const std::vector<SpectrumPoint>& spectrum);
Table plan_table(const PumpPlan& plan);
Table relative_efficiency_table(const std::vector<RelativeEfficiencyPoint>& curve);
Table efficiency_table(const std::vector<EfficiencySample>& samples);

/// Two-column (P_mW, eta) CSV. Lines starting with '#' and a non-numeric
/// header line are skipped. Throws DomainError on malformed rows.
std::vector<EfficiencySample> read_efficiency_csv(std::istream& in);
std::vector<EfficiencySample> read_efficiency_csv_file(const std::string& path);

}  // namespace qfchub::io
