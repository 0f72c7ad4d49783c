// Bundled coefficient sets. Values mirror data/materials.json; a unit test
// checks that the two stay in sync.

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qfchub/dispersion.hpp"
#include "qfchub/errors.hpp"

namespace qfchub {

namespace {

constexpr ValidityWindow kJundtWindow{0.4, 5.0, 20.0, 250.0};
constexpr TemperatureForm kJundtTemperature{24.5, 570.82};

SellmeierForm parse_form(const std::string& s) {
  if (s == "temperature-extended") return SellmeierForm::kTemperatureExtended;
  if (s == "three-term") return SellmeierForm::kThreeTerm;
  throw DomainError("unknown Sellmeier form '" + s + "'");
}

SellmeierModel model_from_json(const nlohmann::json& j) {
  const auto& wl = j.at("validity").at("wavelength_um");
  const auto& t = j.at("validity").at("temperature_c");
  TemperatureForm tf{};
  if (j.contains("temperature_function")) {
    tf.reference_c = j["temperature_function"].value("reference_c", 0.0);
    tf.offset_c = j["temperature_function"].value("offset_c", 0.0);
  }
  return SellmeierModel(j.at("name").get<std::string>(),
                        parse_form(j.at("form").get<std::string>()),
                        j.at("coefficients").get<std::vector<double>>(), tf,
                        ValidityWindow{wl.at(0).get<double>(), wl.at(1).get<double>(),
                                       t.at(0).get<double>(), t.at(1).get<double>()},
                        j.value("source", std::string{}));
}

}  // namespace

const SellmeierModel& jundt_congruent() {
  // D. H. Jundt, Opt. Lett. 22, 1553 (1997).
  static const SellmeierModel model(
      "jundt1997", SellmeierForm::kTemperatureExtended,
      {5.35583, 0.100473, 0.20692, 100.0, 11.34927, 1.5334e-2, 4.629e-7, 3.862e-8, -0.89e-8,
       2.657e-5, 0.0},
      kJundtTemperature, kJundtWindow,
      "D. H. Jundt, Opt. Lett. 22, 1553 (1997); congruent LiNbO3, n_e");
  return model;
}

const SellmeierModel& deng_ppln() {
  // Y. Deng et al., Opt. Commun. 268, 110 (2006).
  static const SellmeierModel model(
      "deng2006", SellmeierForm::kTemperatureExtended,
      {5.39121, 0.100473, 0.20692, 100.0, 11.34927, 1.544e-2, 4.96827e-7, 3.862e-8, -0.89e-8,
       2.657e-5, 9.62119e-10},
      kJundtTemperature, kJundtWindow,
      "Y. Deng et al., Opt. Commun. 268, 110 (2006); PPLN refit of the Jundt form, n_e");
  return model;
}

const SellmeierModel& zelmon_congruent() {
  // D. E. Zelmon, D. L. Small, D. Jundt, JOSA B 14, 3319 (1997), 21 C.
  static const SellmeierModel model(
      "zelmon1997", SellmeierForm::kThreeTerm, {2.9804, 0.02047, 0.5981, 0.0666, 8.9543, 416.08},
      TemperatureForm{}, ValidityWindow{0.4, 5.0, 21.0, 21.0},
      "D. E. Zelmon, D. L. Small, D. Jundt, J. Opt. Soc. Am. B 14, 3319 (1997); congruent "
      "LiNbO3, n_e at 21 C");
  return model;
}

const SellmeierModel& default_material() { return jundt_congruent(); }

const std::vector<SellmeierModel>& bundled_materials() {
  static const std::vector<SellmeierModel> all{jundt_congruent(), deng_ppln(),
                                               zelmon_congruent()};
  return all;
}

const SellmeierModel& find_material(const std::string& name) {
  for (const auto& m : bundled_materials()) {
    if (m.name() == name) return m;
  }
  throw DomainError("unknown material '" + name + "'");
}

std::vector<SellmeierModel> parse_materials(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("materials file: ") + e.what());
  }
  std::vector<SellmeierModel> out;
  try {
    for (const auto& entry : doc.at("materials")) out.push_back(model_from_json(entry));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("materials file: ") + e.what());
  }
  return out;
}

std::vector<SellmeierModel> load_materials(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open materials file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_materials(ss.str());
}

}  // namespace qfchub
