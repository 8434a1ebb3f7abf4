#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/rational.h"

namespace fricke {

// Exact Laurent polynomial in the eigenvalue parameters lambda_1..lambda_n.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars);
  static LaurentPoly constant(int nvars, const Rational& r);
  // Single term c * lambda^exps (exps may be negative).
  static LaurentPoly term(std::vector<int> exps, const Rational& coef);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Exact evaluation; every lambda must be nonzero.
  Rational eval(const std::vector<Rational>& lambdas) const;

  std::string str() const;

 private:
  void check_compat(const LaurentPoly& other) const;
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

}  // namespace fricke
