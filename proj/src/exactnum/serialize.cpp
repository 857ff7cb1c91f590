#include "xlag/exactnum/serialize.hpp"

#include "xlag/errors.hpp"

namespace xlag {

nlohmann::json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const nlohmann::json& j) {
  if (!j.is_string()) throw InvalidParams("rational must be serialized as a \"num/den\" string");
  return parse_rat(j.get<std::string>());
}

nlohmann::json poly_to_json(const Poly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rat_to_json(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidParams("polynomial must be a JSON array");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rat_from_json(c));
  return Poly(std::move(coeffs));
}

nlohmann::json ratfunc_to_json(const RatFunc& f) {
  return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

nlohmann::json shifted_to_json(const ShiftedPoly& f) {
  return {{"shift", rat_to_json(f.shift)}, {"body", poly_to_json(f.body)}};
}

}  // namespace xlag
