#include "qfchub/dwdm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <omp.h>

#include "kernels.hpp"
#include "qfchub/errors.hpp"

namespace qfchub {

double DwdmGrid::center_frequency_thz() const {
  const double mid_port = 0.5 * (1.0 + static_cast<double>(port_count));
  return anchor_thz - (mid_port - 1.0) * spacing_ghz / kGigahertzPerTerahertz;
}

double LaserSpec::min_thz() const { return kSpeedOfLight / (max_nm * kMicronsPerNanometer); }
double LaserSpec::max_thz() const { return kSpeedOfLight / (min_nm * kMicronsPerNanometer); }

double port_frequency(const DwdmGrid& grid, int port) {
  if (port < 1 || port > grid.port_count) {
    throw RangeError("port " + std::to_string(port) + " outside 1.." +
                     std::to_string(grid.port_count));
  }
  return grid.anchor_thz - (port - 1) * grid.spacing_ghz / kGigahertzPerTerahertz;
}

DeviceConfig plan_device(const DwdmGrid& grid, double signal_thz, double length_mm,
                         double temperature_c, const SellmeierModel& material,
                         double design_converted_thz) {
  const double converted = design_converted_thz > 0.0 ? design_converted_thz
                                                      : grid.center_frequency_thz();
  const double period =
      solve_poling_period(SpectralPoint::from_frequency_thz(signal_thz),
                          SpectralPoint::from_frequency_thz(converted), temperature_c, material);
  return DeviceConfig(period, length_mm, temperature_c, material);
}

PumpPlan plan_pumps(const DwdmGrid& grid, double signal_thz, const LaserSpec& laser,
                    const DeviceConfig& device) {
  if (grid.port_count < 1) throw DomainError("grid needs at least one port");
  if (!(grid.spacing_ghz > 0.0)) throw DomainError("grid spacing must be positive");
  if (!(laser.min_nm < laser.max_nm)) throw DomainError("laser range must satisfy min < max");
  // Port 1 is the highest frequency on the grid.
  if (!(signal_thz > grid.anchor_thz)) {
    throw DomainError("signal frequency must exceed every port frequency");
  }
  const auto signal = SpectralPoint::from_frequency_thz(signal_thz);
  PumpPlan plan;
  plan.signal_thz = signal_thz;
  plan.poling_period_um = device.poling_period_um;
  plan.records.reserve(static_cast<std::size_t>(grid.port_count));
  for (int port = 1; port <= grid.port_count; ++port) {
    const auto converted = SpectralPoint::from_frequency_thz(port_frequency(grid, port));
    const auto triple = make_triple(signal, converted);
    PumpRecord r;
    r.port = port;
    r.converted_thz = converted.frequency_thz;
    r.converted_nm = converted.wavelength_nm();
    r.pump_thz = triple.pump.frequency_thz;
    r.pump_nm = triple.pump.wavelength_nm();
    r.in_laser_range = laser.contains(r.pump_nm);
    r.predicted_relative_efficiency =
        pm_efficiency(phase_mismatch(triple, device), device.length_mm);
    plan.records.push_back(r);
  }
  return plan;
}

namespace detail {

RelativeEfficiencyPoint relative_efficiency_sample(const DeviceConfig& device,
                                                   const SpectralPoint& signal,
                                                   double pump_thz) {
  RelativeEfficiencyPoint p;
  p.pump_thz = pump_thz;
  const double converted_thz = signal.frequency_thz - pump_thz;
  if (!(converted_thz > 0.0) || !(pump_thz > 0.0)) {
    p.extrapolated = true;
    return p;
  }
  const InteractionTriple t{signal, SpectralPoint::from_frequency_thz(pump_thz),
                            SpectralPoint::from_frequency_thz(converted_thz)};
  p.relative_efficiency = pm_efficiency(phase_mismatch_unchecked(t, device), device.length_mm);
  p.extrapolated = !device.material.in_validity(t.pump.wavelength_um, device.temperature_c) ||
                   !device.material.in_validity(t.converted.wavelength_um, device.temperature_c);
  return p;
}

}  // namespace detail

namespace {

std::size_t pump_grid_size(double lo, double hi, double step_ghz) {
  if (!(step_ghz > 0.0)) throw DomainError("step must be positive");
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("pump range must be positive and ordered");
  const double step = step_ghz / kGigahertzPerTerahertz;
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void normalize(std::vector<RelativeEfficiencyPoint>& curve) {
  double peak = 0.0;
  for (const auto& p : curve) peak = std::max(peak, p.relative_efficiency);
  if (!(peak > 0.0)) throw DegenerateError("efficiency curve is identically zero");
  for (auto& p : curve) p.relative_efficiency /= peak;
}

}  // namespace

std::vector<RelativeEfficiencyPoint> relative_efficiency_curve(const DeviceConfig& device,
                                                               double signal_thz,
                                                               double pump_lo_thz,
                                                               double pump_hi_thz,
                                                               double step_ghz, int workers) {
  const std::size_t n = pump_grid_size(pump_lo_thz, pump_hi_thz, step_ghz);
  const double step = step_ghz / kGigahertzPerTerahertz;
  const auto signal = SpectralPoint::from_frequency_thz(signal_thz);
  std::vector<RelativeEfficiencyPoint> curve(n);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto count = static_cast<long>(n);

#pragma omp parallel for schedule(static) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    curve[i] = detail::relative_efficiency_sample(device, signal,
                                                  pump_lo_thz + static_cast<double>(i) * step);
  }
  normalize(curve);
  return curve;
}

FrequencyBand band_above(const std::vector<RelativeEfficiencyPoint>& curve, double level) {
  if (curve.empty()) throw DomainError("empty efficiency curve");
  const auto peak = std::max_element(curve.begin(), curve.end(), [](const auto& a, const auto& b) {
    return a.relative_efficiency < b.relative_efficiency;
  });
  auto lo = peak;
  while (lo != curve.begin() && std::prev(lo)->relative_efficiency >= level) --lo;
  auto hi = peak;
  while (std::next(hi) != curve.end() && std::next(hi)->relative_efficiency >= level) ++hi;
  return {lo->pump_thz, hi->pump_thz};
}

namespace reference {

std::vector<RelativeEfficiencyPoint> relative_efficiency_curve(const DeviceConfig& device,
                                                               double signal_thz,
                                                               double pump_lo_thz,
                                                               double pump_hi_thz,
                                                               double step_ghz) {
  const std::size_t n = pump_grid_size(pump_lo_thz, pump_hi_thz, step_ghz);
  const double step = step_ghz / kGigahertzPerTerahertz;
  const auto signal = SpectralPoint::from_frequency_thz(signal_thz);
  std::vector<RelativeEfficiencyPoint> curve;
  curve.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    curve.push_back(detail::relative_efficiency_sample(
        device, signal, pump_lo_thz + static_cast<double>(i) * step));
  }
  normalize(curve);
  return curve;
}

}  // namespace reference

}  // namespace qfchub
