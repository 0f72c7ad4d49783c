#pragma once

#include "qfchub/dispersion.hpp"
#include "qfchub/units.hpp"

namespace qfchub {

/// Signal, pump and converted fields of a difference-frequency process,
/// ν_signal = ν_pump + ν_converted.
struct InteractionTriple {
  SpectralPoint signal;
  SpectralPoint pump;
  SpectralPoint converted;
};

/// A fixed poled waveguide. The material is held by value; models are small
/// and immutable.
struct DeviceConfig {
  double poling_period_um = 0.0;
  double length_mm = 0.0;
  double temperature_c = kDefaultTemperatureC;
  SellmeierModel material = default_material();

  DeviceConfig() = default;
  DeviceConfig(double poling_period_um, double length_mm, double temperature_c,
               SellmeierModel material);
};

/// Pump fixed by energy conservation, ν_p = ν_s − ν_c.
SpectralPoint pump_for(const SpectralPoint& signal, const SpectralPoint& converted);

/// Builds the triple for a signal and converted field.
InteractionTriple make_triple(const SpectralPoint& signal, const SpectralPoint& converted);

/// k = 2π·n(λ)/λ in rad/m; no validity check.
double wavenumber_unchecked(const SellmeierModel& model, double wavelength_um,
                            double temperature_c);

/// k(ω_s) − k(ω_p) − k(ω_c) in rad/m, without the grating term.
double wavevector_imbalance_unchecked(const InteractionTriple& triple,
                                      const SellmeierModel& model, double temperature_c);

/// First-order QPM phase mismatch Δk = k_s − k_p − k_c − 2π/Λ in rad/m.
/// Throws ValidityError when any field is outside the material window.
double phase_mismatch(const InteractionTriple& triple, const DeviceConfig& device);
double phase_mismatch_unchecked(const InteractionTriple& triple, const DeviceConfig& device);

/// Poling period (µm) that zeroes Δk at the given signal/converted pair.
/// Throws DomainError when k_s − k_p − k_c ≤ 0 (no first-order solution).
double solve_poling_period(const SpectralPoint& signal, const SpectralPoint& converted,
                           double temperature_c, const SellmeierModel& material);

/// sin(x)/x with sinc(0) = 1; a Taylor branch is used for |x| < 1e-4.
double sinc(double x);

/// Phase-matching efficiency sinc²(Δk·L/2), Δk in rad/m, L in mm.
double pm_efficiency(double delta_k, double length_mm);

/// Coefficient of Δω/c in the linear expansion of Δk around a matched point
/// when the converted frequency moves up by Δω and the pump down by Δω:
/// n(λc) − n(λp) − λc·n'(λc) + λp·n'(λp) = N_g(λc) − N_g(λp).
double first_order_coefficient(double converted_um, double pump_um, double temperature_c,
                               const SellmeierModel& material);

}  // namespace qfchub
