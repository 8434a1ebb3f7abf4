#include "fricke/laurent.h"

#include <sstream>

namespace fricke {

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("LaurentPoly: negative variable count");
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& r) {
  LaurentPoly p(nvars);
  if (r != 0) p.terms_[std::vector<int>(nvars, 0)] = r;
  return p;
}

LaurentPoly LaurentPoly::term(std::vector<int> exps, const Rational& coef) {
  LaurentPoly p(static_cast<int>(exps.size()));
  if (coef != 0) p.terms_[std::move(exps)] = coef;
  return p;
}

void LaurentPoly::check_compat(const LaurentPoly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("LaurentPoly: variable count mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_compat(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_compat(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compat(b);
  LaurentPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

Rational LaurentPoly::eval(const std::vector<Rational>& lambdas) const {
  if (static_cast<int>(lambdas.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::eval: wrong number of values");
  for (const auto& l : lambdas)
    if (l == 0) throw std::invalid_argument("LaurentPoly::eval: zero eigenvalue");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      int exp = e[i];
      Rational base = exp >= 0 ? lambdas[i] : Rational(1) / lambdas[i];
      for (int k = 0; k < (exp >= 0 ? exp : -exp); ++k) term *= base;
    }
    total += term;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) out << "*l" << (i + 1) << "^" << e[i];
  }
  return out.str();
}

}  // namespace fricke
