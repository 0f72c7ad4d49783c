#include "qfchub/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "qfchub/errors.hpp"

namespace qfchub::io {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw DomainError("unknown output format '" + name + "' (expected csv or json)");
}

Cell number(double v, int decimals) {
  // Round through the text so CSV and JSON agree digit for digit.
  std::string s = fmt::format("{:.{}f}", v, decimals);
  if (s == fmt::format("-{:.{}f}", 0.0, decimals)) s.erase(0, 1);
  return {nlohmann::json(std::stod(s)), s};
}

Cell integer(long v) { return {nlohmann::json(v), std::to_string(v)}; }
Cell text(const std::string& s) { return {nlohmann::json(s), s}; }
Cell flag(bool b) { return {nlohmann::json(b), b ? "1" : "0"}; }

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw DomainError("table row width does not match header");
  rows.push_back(std::move(row));
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::kCsv) {
    out << "# schema=" << kSchemaVersion << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].text;
      out << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["schema"] = kSchemaVersion;
  for (const auto& [key, value] : table.meta.items()) doc[key] = value;
  doc["columns"] = table.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = row[i].value;
    rows.push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

std::string render_table(const Table& table, Format format) {
  std::ostringstream os;
  write_table(table, format, os);
  return os.str();
}

Table tuning_table(const std::vector<HubSweepPoint>& sweep) {
  Table t;
  t.columns = {"signal_nm", "lo_nm", "hi_nm", "width_nm", "width_THz", "channels",
               "limiting_constraint"};
  for (const auto& p : sweep) {
    const auto& r = p.tuning;
    t.add_row({number(p.signal_nm, 3), number(r.lo_nm, 4), number(r.hi_nm, 4),
               number(r.width_nm, 4), number(r.width_thz, 5), integer(r.channel_count),
               text(to_string(r.limiting_constraint))});
  }
  return t;
}

Table spectrum_table(const std::vector<SpectrumPoint>& spectrum) {
  Table t;
  t.columns = {"lambda_c_nm", "lambda_p_nm", "nu_c_THz", "nu_p_THz", "efficiency",
               "extrapolated"};
  for (const auto& p : spectrum) {
    t.add_row({number(p.converted_nm, 4), number(p.pump_nm, 4), number(p.converted_thz, 4),
               number(p.pump_thz, 4), number(p.efficiency, 8), flag(p.extrapolated)});
  }
  return t;
}

Table plan_table(const PumpPlan& plan) {
  Table t;
  t.columns = {"port",        "nu_c_THz",       "lambda_c_nm", "nu_p_THz",
               "lambda_p_nm", "in_laser_range", "rel_eff"};
  t.meta["signal_THz"] = plan.signal_thz;
  t.meta["poling_period_um"] = plan.poling_period_um;
  for (const auto& r : plan.records) {
    t.add_row({integer(r.port), number(r.converted_thz, 3), number(r.converted_nm, 2),
               number(r.pump_thz, 3), number(r.pump_nm, 2), flag(r.in_laser_range),
               number(r.predicted_relative_efficiency, 4)});
  }
  return t;
}

Table relative_efficiency_table(const std::vector<RelativeEfficiencyPoint>& curve) {
  Table t;
  t.columns = {"nu_p_THz", "rel_eff", "extrapolated"};
  for (const auto& p : curve) {
    t.add_row({number(p.pump_thz, 4), number(p.relative_efficiency, 6), flag(p.extrapolated)});
  }
  return t;
}

Table efficiency_table(const std::vector<EfficiencySample>& samples) {
  Table t;
  t.columns = {"P_mW", "eta"};
  for (const auto& s : samples) t.add_row({number(s.power_mw, 4), number(s.efficiency, 8)});
  return t;
}

namespace {

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<EfficiencySample> read_efficiency_csv(std::istream& in) {
  std::vector<EfficiencySample> out;
  std::string line;
  int line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r" || line.front() == '#') continue;
    const auto comma = line.find(',');
    double p = 0.0, eta = 0.0;
    const bool ok = comma != std::string::npos &&
                    parse_double(std::string_view(line).substr(0, comma), p) &&
                    parse_double(std::string_view(line).substr(comma + 1), eta);
    if (!ok) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw DomainError(fmt::format("efficiency CSV line {}: expected 'P_mW,eta'", line_no));
    }
    header_allowed = false;
    out.push_back({p, eta});
  }
  return out;
}

std::vector<EfficiencySample> read_efficiency_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return read_efficiency_csv(in);
}

}  // namespace qfchub::io
