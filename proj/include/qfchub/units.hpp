#pragma once

#include <numbers>
#include <optional>

namespace qfchub {

// Internal unit system: wavelength in µm, frequency in THz, temperature in °C,
// crystal length in mm, wavenumbers and phase mismatch in rad/m.

/// Speed of light expressed as wavelength[µm] × frequency[THz].
inline constexpr double kSpeedOfLight = 299.792458;

inline constexpr double kMicronsPerNanometer = 1e-3;
inline constexpr double kNanometersPerMicron = 1e3;
inline constexpr double kGigahertzPerTerahertz = 1e3;

/// Converts 2π·n/λ with λ in µm into rad/m.
inline constexpr double kPerMicronToPerMeter = 1e6;
inline constexpr double kMetersPerMillimeter = 1e-3;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A vacuum wavelength together with its optical frequency.
///
/// Both fields are always populated and satisfy wavelength·frequency = c.
struct SpectralPoint {
  double wavelength_um = 0.0;
  double frequency_thz = 0.0;

  static SpectralPoint from_wavelength_um(double wavelength_um);
  static SpectralPoint from_wavelength_nm(double wavelength_nm);
  static SpectralPoint from_frequency_thz(double frequency_thz);

  /// Completes a point given exactly one of the two fields.
  static SpectralPoint complete(std::optional<double> wavelength_um,
                                std::optional<double> frequency_thz);

  double wavelength_nm() const { return wavelength_um * kNanometersPerMicron; }
};

inline double frequency_from_wavelength_um(double wavelength_um) {
  return kSpeedOfLight / wavelength_um;
}

inline double wavelength_um_from_frequency(double frequency_thz) {
  return kSpeedOfLight / frequency_thz;
}

}  // namespace qfchub
