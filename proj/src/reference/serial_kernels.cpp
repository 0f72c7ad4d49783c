// Serial reference kernels. These mirror the OpenMP loops element for element
// and must produce identical output.

#include "../kernels.hpp"
#include "qfchub/tunability.hpp"

namespace qfchub::reference {

std::vector<SpectrumPoint> pm_spectrum(double signal_nm, double target_nm,
                                       const DeviceConfig& device, double halfwidth_thz,
                                       double step_ghz) {
  const auto signal = SpectralPoint::from_wavelength_nm(signal_nm);
  const auto grid = detail::make_grid(frequency_from_wavelength_um(target_nm * kMicronsPerNanometer),
                                      halfwidth_thz, step_ghz);
  std::vector<SpectrumPoint> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (auto s = detail::spectrum_sample(signal, grid.at(i), device)) out.push_back(*s);
  }
  return out;
}

std::vector<HubSweepPoint> hub_sweep(double signal_min_nm, double signal_max_nm,
                                     double signal_step_nm, double target_nm, double length_mm,
                                     double temperature_c, const SellmeierModel& material,
                                     const TuningConstraints& constraints) {
  constraints.validate();
  std::vector<HubSweepPoint> out;
  for (double s : sweep_signals(signal_min_nm, signal_max_nm, signal_step_nm)) {
    out.push_back(sweep_point(s, target_nm, length_mm, temperature_c, material, constraints));
  }
  return out;
}

}  // namespace qfchub::reference
