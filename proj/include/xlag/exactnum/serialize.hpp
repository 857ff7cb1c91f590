#pragma once

#include "json.hpp"

#include "xlag/exactnum/poly.hpp"
#include "xlag/exactnum/ratfunc.hpp"
#include "xlag/exactnum/shifted_poly.hpp"

namespace xlag {

/// Poly <-> JSON array of "num/den" strings, lowest power first.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

/// {"num": [...], "den": [...]}
nlohmann::json ratfunc_to_json(const RatFunc& f);
/// {"shift": "s", "body": [...]}
nlohmann::json shifted_to_json(const ShiftedPoly& f);

}  // namespace xlag
