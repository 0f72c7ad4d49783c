#include "qfchub/dispersion.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qfchub/errors.hpp"

namespace qfchub {

namespace {

std::size_t expected_coefficients(SellmeierForm form) {
  switch (form) {
    case SellmeierForm::kTemperatureExtended:
      return 11;
    case SellmeierForm::kThreeTerm:
      return 6;
  }
  return 0;
}

}  // namespace

SellmeierModel::SellmeierModel(std::string name, SellmeierForm form,
                               std::vector<double> coefficients,
                               TemperatureForm temperature_form, ValidityWindow validity,
                               std::string source)
    : name_(std::move(name)),
      form_(form),
      coefficients_(std::move(coefficients)),
      temperature_form_(temperature_form),
      validity_(validity),
      source_(std::move(source)) {
  if (coefficients_.size() != expected_coefficients(form_)) {
    throw DomainError("material '" + name_ + "': expected " +
                      std::to_string(expected_coefficients(form_)) + " coefficients, got " +
                      std::to_string(coefficients_.size()));
  }
  if (!(validity_.wavelength_min_um > 0.0) ||
      !(validity_.wavelength_max_um > validity_.wavelength_min_um) ||
      validity_.temperature_max_c < validity_.temperature_min_c) {
    throw DomainError("material '" + name_ + "': malformed validity window");
  }
}

std::string SellmeierModel::temperature_description() const {
  if (form_ == SellmeierForm::kThreeTerm) {
    std::ostringstream os;
    os << "none (fit at " << validity_.temperature_min_c << " C)";
    return os.str();
  }
  std::ostringstream os;
  os << "f = (T - " << temperature_form_.reference_c << ")(T + " << temperature_form_.offset_c
     << ")";
  return os.str();
}

double SellmeierModel::index_squared(double wl, double t) const {
  const auto& c = coefficients_;
  const double l2 = wl * wl;
  switch (form_) {
    case SellmeierForm::kTemperatureExtended: {
      const double f = temperature_form_.evaluate(t);
      const double pole = c[2] + c[8] * f;
      return c[0] + c[6] * f + (c[1] + c[7] * f) / (l2 - pole * pole) +
             (c[3] + c[9] * f) / (l2 - c[4] * c[4]) - (c[5] + c[10] * f) * l2;
    }
    case SellmeierForm::kThreeTerm: {
      double n2 = 1.0;
      for (std::size_t i = 0; i < 6; i += 2) n2 += c[i] * l2 / (l2 - c[i + 1]);
      return n2;
    }
  }
  return 0.0;
}

double SellmeierModel::index_squared_derivative(double wl, double t) const {
  const auto& c = coefficients_;
  const double l2 = wl * wl;
  switch (form_) {
    case SellmeierForm::kTemperatureExtended: {
      const double f = temperature_form_.evaluate(t);
      const double pole = c[2] + c[8] * f;
      const double d1 = l2 - pole * pole;
      const double d2 = l2 - c[4] * c[4];
      return -2.0 * wl * (c[1] + c[7] * f) / (d1 * d1) -
             2.0 * wl * (c[3] + c[9] * f) / (d2 * d2) - 2.0 * wl * (c[5] + c[10] * f);
    }
    case SellmeierForm::kThreeTerm: {
      double d = 0.0;
      for (std::size_t i = 0; i < 6; i += 2) {
        const double den = l2 - c[i + 1];
        d += -2.0 * wl * c[i] * c[i + 1] / (den * den);
      }
      return d;
    }
  }
  return 0.0;
}

double SellmeierModel::index_unchecked(double wavelength_um, double temperature_c) const {
  return std::sqrt(index_squared(wavelength_um, temperature_c));
}

double SellmeierModel::derivative_unchecked(double wavelength_um, double temperature_c) const {
  return index_squared_derivative(wavelength_um, temperature_c) /
         (2.0 * index_unchecked(wavelength_um, temperature_c));
}

void SellmeierModel::require_valid(double wavelength_um, double temperature_c) const {
  if (!validity_.contains_wavelength(wavelength_um)) {
    std::ostringstream os;
    os << "material '" << name_ << "': wavelength " << wavelength_um * 1e3
       << " nm outside validity [" << validity_.wavelength_min_um * 1e3 << ", "
       << validity_.wavelength_max_um * 1e3 << "] nm";
    throw ValidityError(os.str());
  }
  if (!validity_.contains_temperature(temperature_c)) {
    std::ostringstream os;
    os << "material '" << name_ << "': temperature " << temperature_c
       << " C outside validity [" << validity_.temperature_min_c << ", "
       << validity_.temperature_max_c << "] C";
    throw ValidityError(os.str());
  }
}

double refractive_index(const SellmeierModel& model, double wavelength_um, double temperature_c) {
  model.require_valid(wavelength_um, temperature_c);
  return model.index_unchecked(wavelength_um, temperature_c);
}

double index_derivative(const SellmeierModel& model, double wavelength_um, double temperature_c) {
  model.require_valid(wavelength_um, temperature_c);
  return model.derivative_unchecked(wavelength_um, temperature_c);
}

double group_index(const SellmeierModel& model, double wavelength_um, double temperature_c) {
  model.require_valid(wavelength_um, temperature_c);
  return model.index_unchecked(wavelength_um, temperature_c) -
         wavelength_um * model.derivative_unchecked(wavelength_um, temperature_c);
}

}  // namespace qfchub
