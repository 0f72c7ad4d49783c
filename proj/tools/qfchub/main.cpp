// qfchub command-line front end.
//
// Tables go to --output (or stdout); a one-line JSON summary is always the
// last line on stdout. Exit codes: 0 ok, 2 usage/validation, 3 numeric.

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "qfchub/dispersion.hpp"
#include "qfchub/dwdm.hpp"
#include "qfchub/efficiency.hpp"
#include "qfchub/errors.hpp"
#include "qfchub/io.hpp"
#include "qfchub/polarization.hpp"
#include "qfchub/qpm.hpp"
#include "qfchub/tunability.hpp"

namespace fs = std::filesystem;
using qfchub::cli::RunConfig;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

/// Flags shared by every subcommand; unset values leave the config alone.
struct CommonFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> format;
  std::optional<std::string> output;
  std::optional<int> workers;
  std::optional<std::string> material;
  std::optional<std::string> materials_file;
  std::optional<double> temperature_c;
  std::optional<double> length_mm;
  std::optional<double> cutoff_nm;
  std::optional<double> separation_nm;
  std::optional<double> threshold;
  bool allow_extrapolation = false;
};

void add_common_flags(CLI::App& app, CommonFlags& f) {
  app.add_option("--config", f.config_path,
                 fmt::format("JSON config file (default: ${})", qfchub::cli::kConfigEnvVar));
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", f.output, "Output file (default: stdout)");
  app.add_option("--workers", f.workers, "OpenMP threads, 0 = runtime default")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--material", f.material, "Dispersion model name");
  app.add_option("--materials-file", f.materials_file, "Load dispersion models from JSON");
  app.add_option("--temperature", f.temperature_c, "Crystal temperature [degC]");
  app.add_option("--length", f.length_mm, "Crystal length [mm]");
  auto* cut = app.add_option("--cutoff", f.cutoff_nm, "Max converted wavelength [nm]");
  auto* sep =
      app.add_option("--separation", f.separation_nm, "Min pump-converted separation [nm]");
  cut->excludes(sep);
  app.add_option("--threshold", f.threshold, "Efficiency threshold relative to peak");
  app.add_flag("--allow-extrapolation", f.allow_extrapolation,
               "Evaluate outside the dispersion model's validity window");
}

RunConfig resolve(const CommonFlags& f) {
  RunConfig c = qfchub::cli::load_config(f.config_path);
  if (f.format) c.format = qfchub::io::parse_format(*f.format);
  if (f.output) c.output = *f.output;
  if (f.workers) c.workers = *f.workers;
  if (f.material) c.material = *f.material;
  if (f.materials_file) c.materials_file = *f.materials_file;
  if (f.temperature_c) c.temperature_c = *f.temperature_c;
  if (f.length_mm) c.length_mm = *f.length_mm;
  if (f.cutoff_nm) c.tuning.mode = qfchub::ConstraintMode::cutoff(*f.cutoff_nm);
  if (f.separation_nm) c.tuning.mode = qfchub::ConstraintMode::separation(*f.separation_nm);
  if (f.threshold) c.tuning.efficiency_threshold = *f.threshold;
  if (f.allow_extrapolation) c.tuning.allow_extrapolation = true;
  c.validate();
  return c;
}

void write_text(const std::string& path, const std::string& body) {
  const fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw qfchub::DomainError("cannot write '" + path + "'");
  out << body;
}

void emit(const qfchub::io::Table& table, const RunConfig& c) {
  const std::string body = qfchub::io::render_table(table, c.format);
  if (c.output.empty()) {
    std::cout << body;
  } else {
    write_text(c.output, body);
  }
}

json peak_summary(const std::vector<qfchub::Peak>& peaks, double target_nm) {
  json out = json::array();
  for (const auto& p : peaks) {
    const auto pump = qfchub::pump_for(qfchub::SpectralPoint::from_wavelength_nm(p.location),
                                       qfchub::SpectralPoint::from_wavelength_nm(target_nm));
    out.push_back({{"signal_nm", p.location},
                   {"band_nm", {p.band_lo, p.band_hi}},
                   {"max_at_nm", p.x_at_max},
                   {"width_THz", p.height},
                   {"pump_nm", pump.wavelength_nm()}});
  }
  return out;
}

json tuning_summary(const qfchub::TuningResult& r) {
  return {{"lo_nm", r.lo_nm},
          {"hi_nm", r.hi_nm},
          {"width_nm", r.width_nm},
          {"width_THz", r.width_thz},
          {"channels", r.channel_count},
          {"limiting_constraint", qfchub::to_string(r.limiting_constraint)},
          {"empty", r.empty},
          {"extrapolated", r.extrapolated},
          {"pump_nm", r.pump_center_nm},
          {"poling_period_um", r.poling_period_um}};
}

// ---- subcommands -----------------------------------------------------------

json cmd_index(const RunConfig& c, const std::vector<double>& wavelengths_nm) {
  const auto material = c.resolve_material();
  qfchub::io::Table t;
  t.columns = {"lambda_nm", "n", "dn_dlambda_per_um", "group_index"};
  for (double nm : wavelengths_nm) {
    const double um = nm * qfchub::kMicronsPerNanometer;
    try {
      t.add_row({qfchub::io::number(nm, 3),
                 qfchub::io::number(qfchub::refractive_index(material, um, c.temperature_c), 10),
                 qfchub::io::number(qfchub::index_derivative(material, um, c.temperature_c), 10),
                 qfchub::io::number(qfchub::group_index(material, um, c.temperature_c), 10)});
    } catch (const qfchub::ValidityError& e) {
      throw qfchub::ValidityError(fmt::format("wavelength {} nm: {}", nm, e.what()));
    }
  }
  emit(t, c);
  return {{"material", material.name()}, {"temperature_c", c.temperature_c},
          {"rows", wavelengths_nm.size()}};
}

struct ScanArgs {
  double signal_nm = 780.0;
  double target_nm = 1540.0;
  double halfwidth_thz = 20.0;
  double step_ghz = 10.0;
};

json cmd_pm_scan(const RunConfig& c, const ScanArgs& a) {
  const auto material = c.resolve_material();
  const auto device = qfchub::design_device(a.signal_nm, a.target_nm, c.length_mm,
                                            c.temperature_c, material,
                                            c.tuning.allow_extrapolation);
  const auto spectrum =
      qfchub::pm_spectrum(a.signal_nm, a.target_nm, device, a.halfwidth_thz, a.step_ghz,
                          c.workers);
  emit(qfchub::io::spectrum_table(spectrum), c);
  json summary = {{"points", spectrum.size()}, {"poling_period_um", device.poling_period_um}};
  if (!spectrum.empty()) {
    const auto best = std::max_element(spectrum.begin(), spectrum.end(),
                                       [](const auto& x, const auto& y) {
                                         return x.efficiency < y.efficiency;
                                       });
    summary["max_efficiency_nm"] = best->converted_nm;
    summary["extrapolated_points"] = std::count_if(
        spectrum.begin(), spectrum.end(), [](const auto& p) { return p.extrapolated; });
  }
  return summary;
}

struct TuningArgs {
  double signal_nm = 780.0;
  double target_nm = 1540.0;
};

json cmd_tuning_range(const RunConfig& c, const TuningArgs& a) {
  const auto r = qfchub::tuning_range(a.signal_nm, a.target_nm, c.length_mm, c.temperature_c,
                                      c.resolve_material(), c.tuning);
  emit(qfchub::io::tuning_table({{a.signal_nm, r}}), c);
  return tuning_summary(r);
}

struct SweepArgs {
  double min_nm = 400.0;
  double max_nm = 1000.0;
  double step_nm = 1.0;
  double target_nm = 1540.0;
};

json cmd_hub_sweep(const RunConfig& c, const SweepArgs& a) {
  const auto sweep = qfchub::hub_sweep(a.min_nm, a.max_nm, a.step_nm, a.target_nm, c.length_mm,
                                       c.temperature_c, c.resolve_material(), c.tuning,
                                       c.workers);
  emit(qfchub::io::tuning_table(sweep), c);
  const long empty = std::count_if(sweep.begin(), sweep.end(),
                                   [](const auto& p) { return p.tuning.empty; });
  return {{"points", sweep.size()},
          {"empty_points", empty},
          {"peaks", peak_summary(qfchub::find_sweep_peaks(sweep), a.target_nm)}};
}

struct PlanArgs {
  std::optional<double> signal_thz;
  bool grid_default = false;
  std::optional<double> anchor_thz;
  std::optional<double> spacing_ghz;
  std::optional<int> ports;
  std::optional<double> laser_min_nm;
  std::optional<double> laser_max_nm;
  double design_thz = 0.0;
  std::string curve_output;
  double curve_step_ghz = 10.0;
};

json cmd_plan(RunConfig c, const PlanArgs& a) {
  if (a.grid_default) {
    c.grid = qfchub::DwdmGrid{};
    c.laser = qfchub::LaserSpec{};
  }
  if (a.signal_thz) c.signal_thz = *a.signal_thz;
  if (a.anchor_thz) c.grid.anchor_thz = *a.anchor_thz;
  if (a.spacing_ghz) c.grid.spacing_ghz = *a.spacing_ghz;
  if (a.ports) c.grid.port_count = *a.ports;
  if (a.laser_min_nm) c.laser.min_nm = *a.laser_min_nm;
  if (a.laser_max_nm) c.laser.max_nm = *a.laser_max_nm;
  c.validate();

  const auto device = qfchub::plan_device(c.grid, c.signal_thz, c.length_mm, c.temperature_c,
                                          c.resolve_material(), a.design_thz);
  const auto plan = qfchub::plan_pumps(c.grid, c.signal_thz, c.laser, device);
  emit(qfchub::io::plan_table(plan), c);

  const auto curve = qfchub::relative_efficiency_curve(
      device, c.signal_thz, c.laser.min_thz(), c.laser.max_thz(), a.curve_step_ghz, c.workers);
  if (!a.curve_output.empty()) {
    write_text(a.curve_output,
               qfchub::io::render_table(qfchub::io::relative_efficiency_table(curve), c.format));
  }
  const auto band = qfchub::band_above(curve, 0.9);
  const bool all_in_range = std::all_of(plan.records.begin(), plan.records.end(),
                                        [](const auto& r) { return r.in_laser_range; });
  return {{"ports", plan.records.size()},
          {"signal_THz", c.signal_thz},
          {"poling_period_um", plan.poling_period_um},
          {"all_pumps_in_laser_range", all_in_range},
          {"band_0p9_THz", {band.lo_thz, band.hi_thz}}};
}

struct ChannelArgs {
  double eta_cw = 1.0;
  double eta_ccw = 1.0;
  double phase_rad = 0.0;
  double depolarizing = 0.0;
  std::vector<std::string> inputs = {"H", "V", "D", "A", "R", "L"};
};

qfchub::QfcChannelModel model_of(const ChannelArgs& a) {
  qfchub::QfcChannelModel m{a.eta_cw, a.eta_ccw, a.phase_rad, a.depolarizing};
  m.validate();
  return m;
}

json cmd_simulate(const RunConfig& c, const ChannelArgs& a) {
  const auto model = model_of(a);
  qfchub::io::Table t;
  t.columns = {"input", "success_probability", "bloch_x", "bloch_y", "bloch_z",
               "overlap_with_ideal"};
  const auto& x = qfchub::pauli_basis()[1];
  for (const auto& label : a.inputs) {
    const auto in = qfchub::PolarizationState::from_label(label);
    const auto out = qfchub::apply_channel(in, model);
    const qfchub::PolarizationState ideal(x * in.density() * x);
    const auto b = out.state.bloch();
    t.add_row({qfchub::io::text(label), qfchub::io::number(out.success_probability, 10),
               qfchub::io::number(b[0], 10), qfchub::io::number(b[1], 10),
               qfchub::io::number(b[2], 10),
               qfchub::io::number(out.state.overlap(ideal), 10)});
  }
  emit(t, c);
  return {{"process_fidelity", qfchub::closed_form_fidelity(model)}, {"inputs", a.inputs.size()}};
}

json cmd_tomography(const RunConfig& c, const ChannelArgs& a) {
  const auto model = model_of(a);
  const auto chi = qfchub::reconstruct_chi(qfchub::simulate_tomography(model));
  const auto expected = qfchub::kraus_to_chi(model);
  const double max_error = (chi.chi() - expected.chi()).cwiseAbs().maxCoeff();

  if (c.format == qfchub::io::Format::kJson) {
    const std::string body = qfchub::to_json(chi).dump(2) + "\n";
    if (c.output.empty()) {
      std::cout << body;
    } else {
      write_text(c.output, body);
    }
  } else {
    static const char* kNames[] = {"I", "X", "Y", "Z"};
    qfchub::io::Table t;
    t.columns = {"row", "col", "re", "im"};
    for (int m = 0; m < 4; ++m) {
      for (int n = 0; n < 4; ++n) {
        t.add_row({qfchub::io::text(kNames[m]), qfchub::io::text(kNames[n]),
                   qfchub::io::number(chi.chi()(m, n).real(), 12),
                   qfchub::io::number(chi.chi()(m, n).imag(), 12)});
      }
    }
    emit(t, c);
  }
  return {{"process_fidelity", qfchub::process_fidelity(chi)},
          {"closed_form_fidelity", qfchub::closed_form_fidelity(model)},
          {"trace", chi.trace()},
          {"max_error_vs_model", max_error}};
}

struct FitArgs {
  std::string input;
};

json cmd_fit(const RunConfig& c, const FitArgs& a) {
  const auto data = qfchub::io::read_efficiency_csv_file(a.input);
  const auto fit = qfchub::fit_efficiency(data);
  qfchub::io::Table t;
  t.columns = {"eta_max", "eta_nor_per_mW", "peak_power_mW", "residual_norm"};
  t.add_row({qfchub::io::number(fit.params.eta_max, 8), qfchub::io::number(fit.params.eta_nor, 8),
             qfchub::io::number(qfchub::peak_power_mw(fit.params), 4),
             qfchub::io::number(fit.residual_norm, 10)});
  emit(t, c);
  return {{"eta_max", fit.params.eta_max},
          {"eta_nor_per_mW", fit.params.eta_nor},
          {"residual_norm", fit.residual_norm},
          {"points", data.size()}};
}

struct ReproduceArgs {
  std::string out_root = "runs";
  std::string date;
};

std::string today() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  localtime_r(&now, &tm);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
  return buf;
}

json cmd_reproduce(const RunConfig& base, const ReproduceArgs& a) {
  const fs::path dir = fs::path(a.out_root) / (a.date.empty() ? today() : a.date);
  fs::create_directories(dir);
  const std::string ext = base.format == qfchub::io::Format::kJson ? ".json" : ".csv";
  const auto material = base.resolve_material();
  auto save = [&](const std::string& stem, const qfchub::io::Table& t) {
    write_text((dir / (stem + ext)).string(), qfchub::io::render_table(t, base.format));
  };
  json summary;

  // Phase-matching spectra, 780/493 nm signal into 1540 nm.
  for (const auto& [signal, length] :
       std::vector<std::pair<double, double>>{{780.0, 40.0}, {780.0, 20.0}, {493.0, 40.0}}) {
    const auto device = qfchub::design_device(signal, 1540.0, length, base.temperature_c,
                                              material, base.tuning.allow_extrapolation);
    save(fmt::format("pm_spectrum_{:.0f}nm_L{:.0f}", signal, length),
         qfchub::io::spectrum_table(
             qfchub::pm_spectrum(signal, 1540.0, device, 20.0, 10.0, base.workers)));
  }

  // Tuning ranges: cutoff for 780 nm, 20 nm separation for 493 nm.
  qfchub::io::Table ranges;
  ranges.columns = {"signal_nm", "length_mm", "constraint", "lo_nm",   "hi_nm",
                    "width_nm",  "width_THz", "channels",   "limiting_constraint"};
  struct Case {
    double signal, length;
    qfchub::ConstraintMode mode;
    const char* label;
  };
  json ranges_summary = json::array();
  for (const auto& k : {Case{780.0, 40.0, qfchub::ConstraintMode::cutoff(1550.0), "cutoff 1550"},
                        Case{780.0, 20.0, qfchub::ConstraintMode::cutoff(1550.0), "cutoff 1550"},
                        Case{493.0, 40.0, qfchub::ConstraintMode::separation(20.0),
                             "separation 20"}}) {
    auto constraints = base.tuning;
    constraints.mode = k.mode;
    const auto r = qfchub::tuning_range(k.signal, 1540.0, k.length, base.temperature_c,
                                        material, constraints);
    ranges.add_row({qfchub::io::number(k.signal, 3), qfchub::io::number(k.length, 1),
                    qfchub::io::text(k.label), qfchub::io::number(r.lo_nm, 4),
                    qfchub::io::number(r.hi_nm, 4), qfchub::io::number(r.width_nm, 4),
                    qfchub::io::number(r.width_thz, 5), qfchub::io::integer(r.channel_count),
                    qfchub::io::text(qfchub::to_string(r.limiting_constraint))});
    ranges_summary.push_back({{"signal_nm", k.signal}, {"length_mm", k.length},
                              {"width_nm", r.width_nm}, {"channels", r.channel_count}});
  }
  save("tuning_ranges", ranges);
  summary["tuning_ranges"] = ranges_summary;

  // Hub sweeps into the C band (1540 nm) and O band (1310 nm).
  auto sweep_constraints = base.tuning;
  sweep_constraints.mode = qfchub::ConstraintMode::separation(20.0);
  for (const auto& [name, target] :
       std::vector<std::pair<std::string, double>>{{"hub_sweep_cband", 1540.0},
                                                   {"hub_sweep_oband", 1310.0}}) {
    const auto sweep = qfchub::hub_sweep(400.0, 1000.0, 1.0, target, 40.0, base.temperature_c,
                                         material, sweep_constraints, base.workers);
    save(name, qfchub::io::tuning_table(sweep));
    summary[name] = peak_summary(qfchub::find_sweep_peaks(sweep), target);
  }

  // DWDM pump plan and relative-efficiency curve over the laser range.
  const qfchub::DwdmGrid grid = base.grid;
  const auto device = qfchub::plan_device(grid, base.signal_thz, 40.0, base.temperature_c,
                                          material);
  const auto plan = qfchub::plan_pumps(grid, base.signal_thz, base.laser, device);
  save("pump_plan", qfchub::io::plan_table(plan));
  const auto curve = qfchub::relative_efficiency_curve(
      device, base.signal_thz, base.laser.min_thz(), base.laser.max_thz(), 10.0, base.workers);
  save("relative_efficiency", qfchub::io::relative_efficiency_table(curve));
  const auto band = qfchub::band_above(curve, 0.9);
  summary["band_0p9_THz"] = {band.lo_thz, band.hi_thz};

  json manifest = {{"config", qfchub::cli::to_json(base)}, {"results", summary}};
  write_text((dir / "summary.json").string(), manifest.dump(2) + "\n");
  return {{"directory", dir.string()}, {"results", summary}};
}

int run_guarded(const std::string& name, const std::function<json()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    json summary = body();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    json line = {{"command", name}, {"status", "ok"}};
    line.update(summary);
    line["elapsed_s"] = std::round(elapsed.count() * 1e3) / 1e3;
    std::cout << line.dump() << std::endl;
    return kExitOk;
  } catch (const qfchub::ValidityError& e) {
    std::cerr << "qfchub " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const qfchub::DomainError& e) {
    std::cerr << "qfchub " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const qfchub::RangeError& e) {
    std::cerr << "qfchub " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const qfchub::Error& e) {
    std::cerr << "qfchub " << name << ": numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "qfchub " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qfchub " << name << ": " << e.what() << '\n';
    return kExitNumeric;
  }
}

void add_channel_flags(CLI::App& cmd, ChannelArgs& a) {
  cmd.add_option("--eta-cw", a.eta_cw, "CW conversion efficiency")->default_val(1.0);
  cmd.add_option("--eta-ccw", a.eta_ccw, "CCW conversion efficiency")->default_val(1.0);
  cmd.add_option("--phase", a.phase_rad, "Composite phase [rad]")->default_val(0.0);
  cmd.add_option("--depolarizing", a.depolarizing, "White-noise admixture in [0,1]")
      ->default_val(0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qfchub: quasi-phase-matched frequency-conversion hub design"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonFlags common;
  add_common_flags(app, common);

  std::vector<double> index_nm;
  auto* index = app.add_subcommand("index", "Refractive index, dn/dlambda and group index");
  index->add_option("wavelengths", index_nm, "Wavelengths [nm]")->required();

  ScanArgs scan;
  auto* pm_scan = app.add_subcommand("pm-scan", "Phase-matching efficiency spectrum");
  pm_scan->add_option("--signal", scan.signal_nm, "Signal wavelength [nm]")->required();
  pm_scan->add_option("--target", scan.target_nm, "Design converted wavelength [nm]")
      ->default_val(1540.0);
  pm_scan->add_option("--halfwidth", scan.halfwidth_thz, "Scan half-width [THz]")
      ->default_val(20.0);
  pm_scan->add_option("--step", scan.step_ghz, "Scan step [GHz]")->default_val(10.0);

  TuningArgs tune;
  auto* tuning = app.add_subcommand("tuning-range", "Tunable converted-wavelength range");
  tuning->add_option("--signal", tune.signal_nm, "Signal wavelength [nm]")->required();
  tuning->add_option("--target", tune.target_nm, "Design converted wavelength [nm]")
      ->default_val(1540.0);

  SweepArgs sweep;
  auto* hub = app.add_subcommand("hub-sweep", "Tuning bandwidth versus signal wavelength");
  hub->add_option("--min", sweep.min_nm, "First signal wavelength [nm]")->default_val(400.0);
  hub->add_option("--max", sweep.max_nm, "Last signal wavelength [nm]")->default_val(1000.0);
  hub->add_option("--step", sweep.step_nm, "Signal step [nm]")->default_val(1.0);
  hub->add_option("--target", sweep.target_nm, "Design converted wavelength [nm]")
      ->default_val(1540.0);

  PlanArgs plan;
  auto* plan_cmd = app.add_subcommand("plan", "Per-port pump plan for a DWDM grid");
  plan_cmd->add_option("--signal-freq", plan.signal_thz, "Signal frequency [THz]");
  plan_cmd->add_flag("--grid-default", plan.grid_default,
                     "Use the built-in 16-port grid and laser range");
  plan_cmd->add_option("--anchor", plan.anchor_thz, "Port-1 frequency [THz]");
  plan_cmd->add_option("--spacing", plan.spacing_ghz, "Channel spacing [GHz]");
  plan_cmd->add_option("--ports", plan.ports, "Number of ports");
  plan_cmd->add_option("--laser-min", plan.laser_min_nm, "Pump laser minimum [nm]");
  plan_cmd->add_option("--laser-max", plan.laser_max_nm, "Pump laser maximum [nm]");
  plan_cmd->add_option("--design-freq", plan.design_thz,
                       "Converted frequency the device is phase-matched at [THz]; "
                       "default grid center");
  plan_cmd->add_option("--curve-output", plan.curve_output,
                       "Also write the relative-efficiency curve over the laser range");
  plan_cmd->add_option("--curve-step", plan.curve_step_ghz, "Curve step [GHz]")
      ->default_val(10.0);

  ChannelArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Apply the polarization channel to states");
  add_channel_flags(*simulate, sim);
  simulate->add_option("--input", sim.inputs, "Input labels (H V D A R L)")
      ->check(CLI::IsMember({"H", "V", "D", "A", "R", "L"}));

  ChannelArgs tomo;
  auto* tomography = app.add_subcommand("tomography", "Simulated process tomography");
  add_channel_flags(*tomography, tomo);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit eta_max sin^2(sqrt(eta_nor P)) to CSV data");
  fit_cmd->add_option("--input", fit.input, "CSV with columns P_mW,eta")->required();

  ReproduceArgs repro;
  auto* reproduce = app.add_subcommand("reproduce-paper",
                                       "Regenerate spectra, sweeps and pump plan into a dated "
                                       "directory");
  reproduce->add_option("--out", repro.out_root, "Parent directory")->default_val("runs");
  reproduce->add_option("--date", repro.date, "Directory name instead of today's date");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  return run_guarded(name, [&]() -> json {
    const RunConfig config = resolve(common);
    if (*index) return cmd_index(config, index_nm);
    if (*pm_scan) return cmd_pm_scan(config, scan);
    if (*tuning) return cmd_tuning_range(config, tune);
    if (*hub) return cmd_hub_sweep(config, sweep);
    if (*plan_cmd) return cmd_plan(config, plan);
    if (*simulate) return cmd_simulate(config, sim);
    if (*tomography) return cmd_tomography(config, tomo);
    if (*fit_cmd) return cmd_fit(config, fit);
    return cmd_reproduce(config, repro);
  });
}
