#pragma once

#include <string>
#include <vector>

namespace qfchub {

/// Functional form of a Sellmeier fit.
enum class SellmeierForm {
  /// n² = a1 + b1·f + (a2 + b2·f)/(λ² − (a3 + b3·f)²) + (a4 + b4·f)/(λ² − a5²)
  ///      − (a6 + b5·f)·λ²,  f = (T − t0)(T + t1)
  /// coefficients: a1..a6, b1..b5 (b5 = 0 when the set has no such term).
  kTemperatureExtended,
  /// n² = 1 + Σ A_i·λ²/(λ² − B_i), coefficients: A1, B1, A2, B2, A3, B3.
  /// No temperature dependence.
  kThreeTerm,
};

/// Auxiliary temperature function f = (T − reference)(T + offset).
struct TemperatureForm {
  double reference_c = 0.0;
  double offset_c = 0.0;

  double evaluate(double temperature_c) const {
    return (temperature_c - reference_c) * (temperature_c + offset_c);
  }
};

struct ValidityWindow {
  double wavelength_min_um = 0.0;
  double wavelength_max_um = 0.0;
  double temperature_min_c = 0.0;
  double temperature_max_c = 0.0;

  bool contains_wavelength(double wavelength_um) const {
    return wavelength_um >= wavelength_min_um && wavelength_um <= wavelength_max_um;
  }
  bool contains_temperature(double temperature_c) const {
    return temperature_c >= temperature_min_c && temperature_c <= temperature_max_c;
  }
  bool contains(double wavelength_um, double temperature_c) const {
    return contains_wavelength(wavelength_um) && contains_temperature(temperature_c);
  }
};

/// Extraordinary refractive index model of the nonlinear crystal.
///
/// Immutable after construction. The `*_unchecked` evaluators apply the
/// formula anywhere it is finite; the free functions below enforce the
/// validity window.
class SellmeierModel {
 public:
  SellmeierModel(std::string name, SellmeierForm form, std::vector<double> coefficients,
                 TemperatureForm temperature_form, ValidityWindow validity,
                 std::string source = {});

  const std::string& name() const { return name_; }
  SellmeierForm form() const { return form_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  const TemperatureForm& temperature_form() const { return temperature_form_; }
  const ValidityWindow& validity() const { return validity_; }
  const std::string& source() const { return source_; }

  /// Human-readable description of how temperature enters the model.
  std::string temperature_description() const;

  double index_unchecked(double wavelength_um, double temperature_c) const;
  /// Analytic dn/dλ in 1/µm.
  double derivative_unchecked(double wavelength_um, double temperature_c) const;

  bool in_validity(double wavelength_um, double temperature_c) const {
    return validity_.contains(wavelength_um, temperature_c);
  }

  /// Throws ValidityError naming the violated bound.
  void require_valid(double wavelength_um, double temperature_c) const;

 private:
  // n² and d(n²)/dλ for the configured form.
  double index_squared(double wavelength_um, double temperature_c) const;
  double index_squared_derivative(double wavelength_um, double temperature_c) const;

  std::string name_;
  SellmeierForm form_;
  std::vector<double> coefficients_;
  TemperatureForm temperature_form_;
  ValidityWindow validity_;
  std::string source_;
};

/// n(λ, T). Wavelength in µm, temperature in °C.
double refractive_index(const SellmeierModel& model, double wavelength_um, double temperature_c);

/// dn/dλ in 1/µm.
double index_derivative(const SellmeierModel& model, double wavelength_um, double temperature_c);

/// Group index N_g = n − λ·dn/dλ.
double group_index(const SellmeierModel& model, double wavelength_um, double temperature_c);

/// Default temperature used throughout (°C).
inline constexpr double kDefaultTemperatureC = 48.0;

// Bundled coefficient sets.

/// Congruent LiNbO3, extraordinary axis, temperature dependent (default).
const SellmeierModel& jundt_congruent();
/// Refit of the same functional form from mid-infrared DFG data.
const SellmeierModel& deng_ppln();
/// Room-temperature infrared-corrected congruent LiNbO3 set.
const SellmeierModel& zelmon_congruent();

const SellmeierModel& default_material();
const std::vector<SellmeierModel>& bundled_materials();

/// Looks a model up among the bundled sets; throws DomainError if unknown.
const SellmeierModel& find_material(const std::string& name);

/// Reads a materials file (JSON object with a "materials" array).
std::vector<SellmeierModel> load_materials(const std::string& path);

/// Parses the same schema from an in-memory string.
std::vector<SellmeierModel> parse_materials(const std::string& text);

}  // namespace qfchub
