#pragma once

#include <string>
#include <vector>

#include "qfchub/dispersion.hpp"
#include "qfchub/qpm.hpp"

namespace qfchub {

enum class ConstraintKind {
  /// λc ≤ value and λc < λp (Stokes Raman ordering).
  kMaxConvertedWavelength,
  /// |λp − λc| ≥ value.
  kMinPumpConvertedSeparation,
};

struct ConstraintMode {
  ConstraintKind kind = ConstraintKind::kMaxConvertedWavelength;
  double value_nm = 1550.0;

  static ConstraintMode cutoff(double max_converted_nm) {
    return {ConstraintKind::kMaxConvertedWavelength, max_converted_nm};
  }
  static ConstraintMode separation(double min_separation_nm) {
    return {ConstraintKind::kMinPumpConvertedSeparation, min_separation_nm};
  }
};

struct TuningConstraints {
  double efficiency_threshold = 0.9;
  ConstraintMode mode = ConstraintMode::cutoff(1550.0);
  double scan_halfwidth_thz = 30.0;
  double coarse_step_ghz = 5.0;
  double refine_tolerance_ghz = 0.1;
  double channel_spacing_ghz = 25.0;
  /// Evaluate outside the material window instead of stopping there.
  bool allow_extrapolation = false;

  /// Throws DomainError on out-of-range settings.
  void validate() const;
};

enum class LimitingConstraint {
  kThreshold,
  kCutoff,
  kSeparation,
  kScanEdge,
  /// The material validity window ended the interval.
  kDomainEdge,
};

std::string to_string(LimitingConstraint c);

/// Contiguous converted-wavelength interval around the target with
/// efficiency above threshold and all constraints satisfied.
struct TuningResult {
  double lo_nm = 0.0;
  double hi_nm = 0.0;
  double width_nm = 0.0;
  double width_thz = 0.0;
  long channel_count = 0;
  LimitingConstraint limiting_constraint = LimitingConstraint::kThreshold;
  /// What ended the interval on the short- and long-wavelength side.
  LimitingConstraint short_side_limit = LimitingConstraint::kThreshold;
  LimitingConstraint long_side_limit = LimitingConstraint::kThreshold;
  /// The target itself violates a constraint (width 0).
  bool empty = false;
  /// Some evaluated point lay outside the material window.
  bool extrapolated = false;
  double pump_center_nm = 0.0;
  double poling_period_um = 0.0;
};

struct HubSweepPoint {
  double signal_nm = 0.0;
  TuningResult tuning;
};

struct SpectrumPoint {
  double converted_nm = 0.0;
  double pump_nm = 0.0;
  double converted_thz = 0.0;
  double pump_thz = 0.0;
  double efficiency = 0.0;
  bool extrapolated = false;
};

/// Device whose poling period phase-matches signal → target at temperature.
DeviceConfig design_device(double signal_nm, double target_nm, double length_mm,
                           double temperature_c, const SellmeierModel& material,
                           bool allow_extrapolation = false);

/// floor(width / spacing); 0 for zero width.
long channel_count(double width_thz, double spacing_ghz);

/// Phase-matching efficiency over converted frequency ν_c0 ± halfwidth,
/// ascending in ν_c. Points with non-positive pump frequency are dropped;
/// points outside the material window are kept and flagged.
std::vector<SpectrumPoint> pm_spectrum(double signal_nm, double target_nm,
                                       const DeviceConfig& device, double halfwidth_thz,
                                       double step_ghz, int workers = 0);

TuningResult tuning_range(double signal_nm, double target_nm, double length_mm,
                          double temperature_c, const SellmeierModel& material,
                          const TuningConstraints& constraints);

/// One tuning range per signal wavelength in [signal_min, signal_max], in
/// input order. Points whose design triple is invalid come back empty with
/// kDomainEdge. `workers` ≤ 0 means the OpenMP default.
std::vector<HubSweepPoint> hub_sweep(double signal_min_nm, double signal_max_nm,
                                     double signal_step_nm, double target_nm, double length_mm,
                                     double temperature_c, const SellmeierModel& material,
                                     const TuningConstraints& constraints, int workers = 0);

/// Signal grid used by hub_sweep.
std::vector<double> sweep_signals(double signal_min_nm, double signal_max_nm,
                                  double signal_step_nm);

/// Tuning range for one sweep point; never throws for an invalid triple.
HubSweepPoint sweep_point(double signal_nm, double target_nm, double length_mm,
                          double temperature_c, const SellmeierModel& material,
                          const TuningConstraints& constraints);

struct SweetSpotReport {
  double first_order_coefficient = 0.0;
  bool is_second_harmonic_midpoint = false;
  double midpoint_wavelength_nm = 0.0;  // 2·λ_signal
  double pump_nm = 0.0;
  /// |2λs − (λc0 + λp0)/2|
  double midpoint_offset_nm = 0.0;
};

SweetSpotReport sweet_spot_report(double signal_nm, double target_nm, double temperature_c,
                                  const SellmeierModel& material, double tolerance_nm = 1.0);

// Peak analysis for sweep curves.

struct Peak {
  std::size_t index = 0;  // position of the maximum sample
  double x_at_max = 0.0;
  double height = 0.0;
  double prominence = 0.0;
  double band_lo = 0.0;  // contiguous half-maximum band
  double band_hi = 0.0;
  double location = 0.0;  // band midpoint
};

/// Local maxima of y(x) whose topographic prominence is at least
/// `min_relative_prominence`·height. Samples with `missing[i]` set are
/// skipped when comparing neighbours and end half-maximum bands.
std::vector<Peak> find_peaks(const std::vector<double>& x, const std::vector<double>& y,
                             const std::vector<bool>& missing,
                             double min_relative_prominence = 0.5);

/// Peaks of tunable bandwidth (THz) along a sweep; empty results are missing.
std::vector<Peak> find_sweep_peaks(const std::vector<HubSweepPoint>& sweep,
                                   double min_relative_prominence = 0.5);

namespace reference {

// Single-threaded versions of the parallel kernels, kept for equivalence
// tests and benchmarking.
std::vector<SpectrumPoint> pm_spectrum(double signal_nm, double target_nm,
                                       const DeviceConfig& device, double halfwidth_thz,
                                       double step_ghz);

std::vector<HubSweepPoint> hub_sweep(double signal_min_nm, double signal_max_nm,
                                     double signal_step_nm, double target_nm, double length_mm,
                                     double temperature_c, const SellmeierModel& material,
                                     const TuningConstraints& constraints);

}  // namespace reference

}  // namespace qfchub
