#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qfchub/errors.hpp"

namespace qfchub::cli {

namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  if (!j.is_object()) throw DomainError("config: '" + where + "' must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw DomainError("config: unknown key '" + where + key + "'");
  }
}

template <typename T>
void read(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

void RunConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw DomainError(std::string(name) + " must be positive");
  };
  positive(temperature_c + 273.15, "absolute temperature");
  positive(length_mm, "crystal length");
  positive(signal_thz, "signal frequency");
  positive(grid.anchor_thz, "grid anchor");
  positive(grid.spacing_ghz, "grid spacing");
  if (grid.port_count < 1) throw DomainError("grid needs at least one port");
  positive(laser.min_nm, "laser minimum");
  if (!(laser.max_nm > laser.min_nm)) throw DomainError("laser range must satisfy min < max");
  if (workers < 0) throw DomainError("workers must be non-negative");
  tuning.validate();
}

SellmeierModel RunConfig::resolve_material() const {
  if (materials_file.empty()) return find_material(material);
  for (auto& m : load_materials(materials_file)) {
    if (m.name() == material) return m;
  }
  throw DomainError("material '" + material + "' not found in " + materials_file);
}

void apply_json(RunConfig& c, const nlohmann::json& j) {
  require_keys(j,
               {"material", "materials_file", "temperature_c", "length_mm", "constraint",
                "tuning", "grid", "laser", "signal_thz", "format", "output", "workers"},
               "");
  read(j, "material", c.material);
  read(j, "materials_file", c.materials_file);
  read(j, "temperature_c", c.temperature_c);
  read(j, "length_mm", c.length_mm);
  read(j, "signal_thz", c.signal_thz);
  read(j, "output", c.output);
  read(j, "workers", c.workers);
  if (j.contains("format")) c.format = io::parse_format(j.at("format").get<std::string>());

  if (j.contains("constraint")) {
    const auto& k = j.at("constraint");
    require_keys(k, {"mode", "value_nm"}, "constraint.");
    const auto mode = k.at("mode").get<std::string>();
    const double value = k.at("value_nm").get<double>();
    if (mode == "cutoff") {
      c.tuning.mode = ConstraintMode::cutoff(value);
    } else if (mode == "separation") {
      c.tuning.mode = ConstraintMode::separation(value);
    } else {
      throw DomainError("config: constraint.mode must be 'cutoff' or 'separation'");
    }
  }
  if (j.contains("tuning")) {
    const auto& t = j.at("tuning");
    require_keys(t,
                 {"threshold", "scan_halfwidth_thz", "coarse_step_ghz", "refine_tolerance_ghz",
                  "channel_spacing_ghz", "allow_extrapolation"},
                 "tuning.");
    read(t, "threshold", c.tuning.efficiency_threshold);
    read(t, "scan_halfwidth_thz", c.tuning.scan_halfwidth_thz);
    read(t, "coarse_step_ghz", c.tuning.coarse_step_ghz);
    read(t, "refine_tolerance_ghz", c.tuning.refine_tolerance_ghz);
    read(t, "channel_spacing_ghz", c.tuning.channel_spacing_ghz);
    read(t, "allow_extrapolation", c.tuning.allow_extrapolation);
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    require_keys(g, {"anchor_thz", "spacing_ghz", "ports"}, "grid.");
    read(g, "anchor_thz", c.grid.anchor_thz);
    read(g, "spacing_ghz", c.grid.spacing_ghz);
    read(g, "ports", c.grid.port_count);
  }
  if (j.contains("laser")) {
    const auto& l = j.at("laser");
    require_keys(l, {"min_nm", "max_nm"}, "laser.");
    read(l, "min_nm", c.laser.min_nm);
    read(l, "max_nm", c.laser.max_nm);
  }
}

RunConfig load_config(const std::optional<std::string>& path) {
  RunConfig config;
  std::string source;
  if (path) {
    source = *path;
  } else if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
    source = env;
  }
  if (source.empty()) return config;

  std::ifstream in(source);
  if (!in) throw DomainError("cannot open config '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str(), nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("config '" + source + "': " + e.what());
  }
  try {
    apply_json(config, j);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("config '" + source + "': " + e.what());
  }
  return config;
}

nlohmann::json to_json(const RunConfig& c) {
  const bool cutoff = c.tuning.mode.kind == ConstraintKind::kMaxConvertedWavelength;
  return {
      {"material", c.material},
      {"materials_file", c.materials_file},
      {"temperature_c", c.temperature_c},
      {"length_mm", c.length_mm},
      {"constraint", {{"mode", cutoff ? "cutoff" : "separation"}, {"value_nm", c.tuning.mode.value_nm}}},
      {"tuning",
       {{"threshold", c.tuning.efficiency_threshold},
        {"scan_halfwidth_thz", c.tuning.scan_halfwidth_thz},
        {"coarse_step_ghz", c.tuning.coarse_step_ghz},
        {"refine_tolerance_ghz", c.tuning.refine_tolerance_ghz},
        {"channel_spacing_ghz", c.tuning.channel_spacing_ghz},
        {"allow_extrapolation", c.tuning.allow_extrapolation}}},
      {"grid",
       {{"anchor_thz", c.grid.anchor_thz},
        {"spacing_ghz", c.grid.spacing_ghz},
        {"ports", c.grid.port_count}}},
      {"laser", {{"min_nm", c.laser.min_nm}, {"max_nm", c.laser.max_nm}}},
      {"signal_thz", c.signal_thz},
      {"workers", c.workers},
  };
}

}  // namespace qfchub::cli
