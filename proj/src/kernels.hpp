#pragma once

// Per-element work shared by the OpenMP kernels and their serial references.

#include <cstddef>
#include <optional>

#include "qfchub/dwdm.hpp"
#include "qfchub/tunability.hpp"

namespace qfchub::detail {

/// Spectrum sample at converted frequency ν_c; nullopt when ν_p ≤ 0.
std::optional<SpectrumPoint> spectrum_sample(const SpectralPoint& signal, double converted_thz,
                                             const DeviceConfig& device);

/// Converted-frequency grid ν_c0 + (i − m)·step, i = 0..2m.
struct SymmetricGrid {
  double center = 0.0;
  double step = 0.0;
  std::size_t half_count = 0;

  std::size_t size() const { return 2 * half_count + 1; }
  double at(std::size_t i) const {
    return center + (static_cast<double>(i) - static_cast<double>(half_count)) * step;
  }
};

SymmetricGrid make_grid(double center_thz, double halfwidth_thz, double step_ghz);

/// Raw efficiency (not normalized) of one relative-efficiency sample.
RelativeEfficiencyPoint relative_efficiency_sample(const DeviceConfig& device,
                                                   const SpectralPoint& signal,
                                                   double pump_thz);

}  // namespace qfchub::detail
