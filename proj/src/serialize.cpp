#include "cotcoord/serialize.hpp"

#include <stdexcept>
#include <string>

namespace cotcoord {

nlohmann::json to_json(const CycElem& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : a.coeffs()) coeffs.push_back(to_string(q));
  return {{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

CycElem cycelem_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw std::invalid_argument("CycElem JSON needs \"order\" and \"coeffs\"");
  if (!j["order"].is_number_integer() || j["order"].get<long>() < 1)
    throw std::invalid_argument("CycElem \"order\" must be a positive integer");
  if (!j["coeffs"].is_array()) throw std::invalid_argument("CycElem \"coeffs\" must be an array");
  std::vector<Rat> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("CycElem coefficients must be \"p/q\" strings");
    coeffs.push_back(parse_rat(c.get<std::string>()));
  }
  return CycElem::from_coeffs(j["order"].get<long>(), std::move(coeffs));
}

nlohmann::json to_json(const DirichletCharacter& chi) {
  return {{"modulus", chi.modulus()},
          {"index", chi.index()},
          {"exponents", chi.exponents()},
          {"order", chi.order()},
          {"conductor", conductor(chi)},
          {"parity", parity(chi)}};
}

nlohmann::json to_json(std::complex<long double> z) {
  return {{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}};
}

}  // namespace cotcoord
