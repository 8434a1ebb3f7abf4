#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace fricke {

// Exact arbitrary-precision scalars. cpp_rational keeps values in lowest
// terms with positive denominator, which is exactly the canonical form we
// need; nothing in this project ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

// Parses "p", "-p/q", etc. Throws std::invalid_argument naming the token.
Rational parse_rational(std::string_view text);

Int binomial(long long n, long long k);

}  // namespace fricke
