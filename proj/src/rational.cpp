#include "fricke/rational.h"

#include <cctype>
#include <stdexcept>

namespace fricke {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    throw std::invalid_argument("empty rational literal");
  std::string s(text.substr(begin, end - begin + 1));

  auto is_int = [](std::string_view v) {
    if (!v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  size_t slash = s.find('/');
  bool ok = slash == std::string::npos
                ? is_int(s)
                : is_int(std::string_view(s).substr(0, slash)) &&
                      is_int(std::string_view(s).substr(slash + 1));
  if (!ok)
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
}

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;  // exact at every step
  }
  return result;
}

}  // namespace fricke
