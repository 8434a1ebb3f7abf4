#pragma once

#include <map>

#include "fricke/varid.h"

namespace fricke {

// Power product of generator variables; exponents are strictly positive,
// the empty map is the unit monomial.
class Monomial {
 public:
  Monomial() = default;
  static Monomial unit() { return Monomial(); }
  static Monomial var(VarId v, int exp = 1);

  const std::map<VarId, int>& exponents() const { return exps_; }
  int exponent(VarId v) const;
  bool is_unit() const { return exps_.empty(); }

  int degree() const;        // total degree
  int pair_degree() const;   // total degree in Pair variables
  int max_index() const;     // 0 for the unit monomial

  Monomial times(const Monomial& other) const;
  Monomial times(VarId v, int exp = 1) const;
  // Removes exp from v's exponent; requires exponent(v) >= exp.
  Monomial divide(VarId v, int exp) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded lexicographic with the fixed variable order of VarId; among equal
  // degrees the monomial with the larger exponent on the earliest differing
  // variable comes first, so map iteration matches the conventional display
  // order (t_1^2, t_1 t_2, t_2^2, ...).
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::map<VarId, int> exps_;
};

}  // namespace fricke
