#include "fricke/json_io.h"

#include <cctype>

namespace fricke {

std::string var_key(VarId v) {
  if (v.is_pair()) {
    if (v.first() <= 9 && v.second() <= 9)
      return "t_" + std::to_string(v.first()) + std::to_string(v.second());
    return "t_{" + std::to_string(v.first()) + "," + std::to_string(v.second()) + "}";
  }
  std::string digits = std::to_string(v.first());
  // A two-digit single with strictly increasing digits would read back as a
  // pair; those use the braced form.
  if (digits.size() == 2 && digits[0] < digits[1] && digits[0] != '0')
    return "t_{" + digits + "}";
  return "t_" + digits;
}

VarId parse_var_key(const std::string& key) {
  auto fail = [&](const std::string& why) -> VarId {
    throw std::invalid_argument("bad variable key '" + key + "': " + why);
  };
  if (key.size() < 3 || key[0] != 't' || key[1] != '_')
    return fail("expected 't_...'");
  std::string body = key.substr(2);

  if (body.front() == '{') {
    if (body.back() != '}') return fail("unbalanced braces");
    std::string inner = body.substr(1, body.size() - 2);
    size_t comma = inner.find(',');
    try {
      if (comma == std::string::npos) return VarId::single(std::stoi(inner));
      return VarId::pair(std::stoi(inner.substr(0, comma)),
                         std::stoi(inner.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
      return fail("malformed braced index");
    } catch (const std::out_of_range&) {
      return fail("index out of range");
    }
  }

  for (char c : body)
    if (!std::isdigit(static_cast<unsigned char>(c))) return fail("non-digit index");
  if (body.size() == 2) {
    int i = body[0] - '0', j = body[1] - '0';
    if (i >= 1 && i < j) return VarId::pair(i, j);
  }
  try {
    return VarId::single(std::stoi(body));
  } catch (const std::exception&) {
    return fail("index out of range");
  }
}

nlohmann::ordered_json poly_to_json(const Poly& p) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["coord"] = p.coord() == Coord::T ? "t" : "t'";
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json term;
    term["coef"] = to_string(c);
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.exponents()) mono[var_key(v)] = e;
    term["mono"] = std::move(mono);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  if (j.contains("schema") && j.at("schema") != 1)
    throw std::invalid_argument("unsupported polynomial schema version");
  std::string coord_name = j.value("coord", "");
  Coord coord;
  if (coord_name == "t")
    coord = Coord::T;
  else if (coord_name == "t'")
    coord = Coord::TPrime;
  else
    throw std::invalid_argument("polynomial JSON needs \"coord\": \"t\" or \"t'\"");
  Poly p(coord);
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("coef") || !term.contains("mono"))
      throw std::invalid_argument("each term needs \"coef\" and \"mono\"");
    Rational coef = parse_rational(term.at("coef").get<std::string>());
    Monomial m;
    for (const auto& [key, val] : term.at("mono").items()) {
      if (!val.is_number_integer() || val.get<long long>() < 1)
        throw std::invalid_argument("exponent of '" + key + "' must be a positive integer");
      m = m.times(parse_var_key(key), val.get<int>());
    }
    p.add_term(m, coef);
  }
  return p;
}

}  // namespace fricke
