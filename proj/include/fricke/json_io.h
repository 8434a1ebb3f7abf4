#pragma once

#include <json.hpp>

#include "fricke/poly.h"

namespace fricke {

// Wire format (schema 1):
//   {"schema": 1, "coord": "t" | "t'",
//    "terms": [{"coef": "p/q", "mono": {"t_1": 2, "t_12": 1}}, ...]}
// Variable keys: "t_i" for singles; "t_ij" for pairs when both indices are
// single digits; the braced forms "t_{i}" / "t_{i,j}" cover everything else
// unambiguously. Coefficients are decimal strings, "p" or "p/q".

std::string var_key(VarId v);
VarId parse_var_key(const std::string& key);

nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace fricke
