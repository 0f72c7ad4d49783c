#include "qfchub/qpm.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qfchub/errors.hpp"

namespace qfchub {

DeviceConfig::DeviceConfig(double poling_period_um, double length_mm, double temperature_c,
                           SellmeierModel material)
    : poling_period_um(poling_period_um),
      length_mm(length_mm),
      temperature_c(temperature_c),
      material(std::move(material)) {
  if (!(poling_period_um > 0.0)) throw DomainError("poling period must be positive");
  if (!(length_mm > 0.0)) throw DomainError("crystal length must be positive");
}

SpectralPoint pump_for(const SpectralPoint& signal, const SpectralPoint& converted) {
  if (!(signal.frequency_thz > converted.frequency_thz)) {
    std::ostringstream os;
    os << "signal frequency " << signal.frequency_thz
       << " THz must exceed converted frequency " << converted.frequency_thz << " THz";
    throw DomainError(os.str());
  }
  return SpectralPoint::from_frequency_thz(signal.frequency_thz - converted.frequency_thz);
}

InteractionTriple make_triple(const SpectralPoint& signal, const SpectralPoint& converted) {
  return {signal, pump_for(signal, converted), converted};
}

double wavenumber_unchecked(const SellmeierModel& model, double wavelength_um,
                            double temperature_c) {
  return kTwoPi * model.index_unchecked(wavelength_um, temperature_c) / wavelength_um *
         kPerMicronToPerMeter;
}

double wavevector_imbalance_unchecked(const InteractionTriple& t, const SellmeierModel& model,
                                      double temperature_c) {
  return wavenumber_unchecked(model, t.signal.wavelength_um, temperature_c) -
         wavenumber_unchecked(model, t.pump.wavelength_um, temperature_c) -
         wavenumber_unchecked(model, t.converted.wavelength_um, temperature_c);
}

double phase_mismatch_unchecked(const InteractionTriple& triple, const DeviceConfig& device) {
  return wavevector_imbalance_unchecked(triple, device.material, device.temperature_c) -
         kTwoPi / device.poling_period_um * kPerMicronToPerMeter;
}

double phase_mismatch(const InteractionTriple& triple, const DeviceConfig& device) {
  for (const auto* p : {&triple.signal, &triple.pump, &triple.converted}) {
    device.material.require_valid(p->wavelength_um, device.temperature_c);
  }
  return phase_mismatch_unchecked(triple, device);
}

double solve_poling_period(const SpectralPoint& signal, const SpectralPoint& converted,
                           double temperature_c, const SellmeierModel& material) {
  const InteractionTriple t = make_triple(signal, converted);
  for (const auto* p : {&t.signal, &t.pump, &t.converted}) {
    material.require_valid(p->wavelength_um, temperature_c);
  }
  const double imbalance = wavevector_imbalance_unchecked(t, material, temperature_c);
  if (!(imbalance > 0.0)) {
    throw DomainError("no first-order QPM solution: k_s - k_p - k_c is not positive");
  }
  return kTwoPi / imbalance * kPerMicronToPerMeter;
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double pm_efficiency(double delta_k, double length_mm) {
  const double s = sinc(0.5 * delta_k * length_mm * kMetersPerMillimeter);
  return s * s;
}

double first_order_coefficient(double converted_um, double pump_um, double temperature_c,
                               const SellmeierModel& material) {
  material.require_valid(converted_um, temperature_c);
  material.require_valid(pump_um, temperature_c);
  const double nc = material.index_unchecked(converted_um, temperature_c);
  const double np = material.index_unchecked(pump_um, temperature_c);
  const double dc = material.derivative_unchecked(converted_um, temperature_c);
  const double dp = material.derivative_unchecked(pump_um, temperature_c);
  return nc - np - converted_um * dc + pump_um * dp;
}

}  // namespace qfchub
