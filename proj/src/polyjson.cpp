#include "rgal/polyjson.hpp"

#include <stdexcept>

#include "json.hpp"

namespace rgal {

namespace {

nlohmann::json header(const std::string& var) {
  nlohmann::json j;
  j["var"] = var;
  j["coeffs"] = nlohmann::json::array();
  return j;
}

nlohmann::json parse_object(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON: expected {\"var\",\"coeffs\"}");
  return j;
}

}  // namespace

std::string poly_to_json(const Poly<Rat>& f, const std::string& var) {
  nlohmann::json j = header(var);
  for (int i = 0; i <= f.deg(); ++i) j["coeffs"].push_back(rat_string(f.coeff(i)));
  return j.dump();
}

std::string poly_to_json(const Poly<EisRat>& f, const std::string& var) {
  nlohmann::json j = header(var);
  for (int i = 0; i <= f.deg(); ++i) {
    const EisRat& c = f.coeff(i);
    j["coeffs"].push_back({rat_string(c.a), rat_string(c.b)});
  }
  return j.dump();
}

Poly<Rat> poly_from_json(const std::string& text) {
  nlohmann::json j = parse_object(text);
  std::vector<Rat> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("polynomial JSON: coefficients must be strings");
    coeffs.push_back(parse_rat(c.get<std::string>()));
  }
  return Poly<Rat>(std::move(coeffs));
}

Poly<EisRat> eis_poly_from_json(const std::string& text) {
  nlohmann::json j = parse_object(text);
  std::vector<EisRat> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_array() || c.size() != 2)
      throw std::invalid_argument("polynomial JSON: expected [\"a\",\"b\"] pairs");
    coeffs.emplace_back(parse_rat(c[0].get<std::string>()),
                        parse_rat(c[1].get<std::string>()));
  }
  return Poly<EisRat>(std::move(coeffs));
}

}  // namespace rgal
