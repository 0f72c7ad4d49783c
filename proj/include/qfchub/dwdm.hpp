#pragma once

#include <vector>

#include "qfchub/qpm.hpp"

namespace qfchub {

/// Fixed-spacing frequency grid; port 1 is the highest frequency.
struct DwdmGrid {
  double anchor_thz = 194.850;
  double spacing_ghz = 25.0;
  int port_count = 16;

  /// Frequency of the midpoint between the two central ports (or the central
  /// port for odd counts).
  double center_frequency_thz() const;
};

/// Tunable pump laser, vacuum wavelengths in nm.
struct LaserSpec {
  double min_nm = 1572.063;
  double max_nm = 1607.760;

  bool contains(double wavelength_nm) const {
    return wavelength_nm >= min_nm && wavelength_nm <= max_nm;
  }
  double min_thz() const;
  double max_thz() const;
};

/// Throws RangeError unless 1 ≤ port ≤ port_count.
double port_frequency(const DwdmGrid& grid, int port);

struct PumpRecord {
  int port = 0;
  double converted_thz = 0.0;
  double converted_nm = 0.0;
  double pump_thz = 0.0;
  double pump_nm = 0.0;
  bool in_laser_range = false;
  double predicted_relative_efficiency = 0.0;
};

struct PumpPlan {
  double signal_thz = 0.0;
  double poling_period_um = 0.0;
  std::vector<PumpRecord> records;
};

/// Device phase-matched at `design_converted_thz` (default: grid center).
DeviceConfig plan_device(const DwdmGrid& grid, double signal_thz, double length_mm,
                         double temperature_c, const SellmeierModel& material,
                         double design_converted_thz = 0.0);

/// One pump record per port for a fixed device. Throws DomainError when the
/// signal does not lie above every port frequency.
PumpPlan plan_pumps(const DwdmGrid& grid, double signal_thz, const LaserSpec& laser,
                    const DeviceConfig& device);

struct RelativeEfficiencyPoint {
  double pump_thz = 0.0;
  double relative_efficiency = 0.0;
  bool extrapolated = false;
};

/// sinc² efficiency versus pump frequency over [pump_lo, pump_hi] in
/// ascending order, normalized to a peak of 1.
std::vector<RelativeEfficiencyPoint> relative_efficiency_curve(const DeviceConfig& device,
                                                               double signal_thz,
                                                               double pump_lo_thz,
                                                               double pump_hi_thz,
                                                               double step_ghz, int workers = 0);

struct FrequencyBand {
  double lo_thz = 0.0;
  double hi_thz = 0.0;
  double width_thz() const { return hi_thz - lo_thz; }
};

/// Contiguous band around the curve maximum where the value stays ≥ level.
FrequencyBand band_above(const std::vector<RelativeEfficiencyPoint>& curve, double level);

namespace reference {

std::vector<RelativeEfficiencyPoint> relative_efficiency_curve(const DeviceConfig& device,
                                                               double signal_thz,
                                                               double pump_lo_thz,
                                                               double pump_hi_thz,
                                                               double step_ghz);

}  // namespace reference

}  // namespace qfchub
