#include "qfchub/units.hpp"

#include <cmath>
#include <string>

#include "qfchub/errors.hpp"

namespace qfchub {

namespace {

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

}  // namespace

SpectralPoint SpectralPoint::from_wavelength_um(double wavelength_um) {
  require_positive(wavelength_um, "wavelength");
  return {wavelength_um, kSpeedOfLight / wavelength_um};
}

SpectralPoint SpectralPoint::from_wavelength_nm(double wavelength_nm) {
  return from_wavelength_um(wavelength_nm * kMicronsPerNanometer);
}

SpectralPoint SpectralPoint::from_frequency_thz(double frequency_thz) {
  require_positive(frequency_thz, "frequency");
  return {kSpeedOfLight / frequency_thz, frequency_thz};
}

SpectralPoint SpectralPoint::complete(std::optional<double> wavelength_um,
                                      std::optional<double> frequency_thz) {
  if (wavelength_um.has_value() == frequency_thz.has_value()) {
    throw DomainError("exactly one of wavelength or frequency must be given");
  }
  return wavelength_um ? from_wavelength_um(*wavelength_um)
                       : from_frequency_thz(*frequency_thz);
}

}  // namespace qfchub
