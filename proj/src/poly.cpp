#include "fricke/poly.h"

#include <sstream>

namespace fricke {

Poly Poly::constant(Coord c, const Rational& r) {
  Poly p(c);
  p.add_term(Monomial::unit(), r);
  return p;
}

Poly Poly::var(Coord c, VarId v, int exp) {
  Poly p(c);
  p.add_term(Monomial::var(v, exp), 1);
  return p;
}

Poly Poly::monomial(Coord c, const Monomial& m, const Rational& coef) {
  Poly p(c);
  p.add_term(m, coef);
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    if (m.degree() > d) d = m.degree();
  return d;
}

int Poly::min_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() < d) d = m.degree();
  return d;
}

int Poly::max_index() const {
  int idx = 0;
  for (const auto& [m, c] : terms_)
    if (m.max_index() > idx) idx = m.max_index();
  return idx;
}

Poly& Poly::add_term(const Monomial& m, const Rational& coef) {
  if (coef == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Poly& Poly::operator+=(const Poly& other) {
  check_coord(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_coord(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_coord(b);
  Poly out(a.coord());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

Poly& Poly::operator/=(const Rational& r) {
  if (r == 0) throw std::invalid_argument("division of polynomial by zero");
  for (auto& [m, c] : terms_) c /= r;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out(a.coord());
  for (const auto& [m, c] : a.terms_) out.add_term(m, -c);
  return out;
}

Rational Poly::eval(const std::function<Rational(VarId)>& values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m.exponents()) {
      Rational val = values(v);
      for (int i = 0; i < e; ++i) term *= val;
    }
    total += term;
  }
  return total;
}

namespace {

std::string var_text(VarId v, bool prime) {
  std::string name = prime ? "t'_" : "t_";
  if (v.is_single()) return name + std::to_string(v.first());
  if (v.first() <= 9 && v.second() <= 9)
    return name + std::to_string(v.first()) + std::to_string(v.second());
  return name + "{" + std::to_string(v.first()) + "," + std::to_string(v.second()) + "}";
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  bool prime = coord_ == Coord::TPrime;
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    if (first) {
      if (coef < 0) {
        out << "-";
        coef = -coef;
      }
    } else {
      out << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    bool unit_coef = coef == 1 && !m.is_unit();
    if (!unit_coef) out << to_string(coef);
    bool need_sep = !unit_coef;
    for (const auto& [v, e] : m.exponents()) {
      if (need_sep) out << "*";
      out << var_text(v, prime);
      if (e > 1) out << "^" << e;
      need_sep = true;
    }
  }
  return out.str();
}

Poly shift_coordinates(const Poly& p, Coord target) {
  if (p.coord() == target) return p;
  // t = t' + 2 going down, t' = t - 2 going up.
  Rational offset = target == Coord::TPrime ? Rational(2) : Rational(-2);
  std::map<std::pair<VarId, int>, Poly> powers;
  Poly out(target);
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (const auto& [v, e] : m.exponents()) {
      auto key = std::make_pair(v, e);
      auto it = powers.find(key);
      if (it == powers.end()) {
        Poly base = Poly::var(target, v) + Poly::constant(target, offset);
        Poly pw = Poly::constant(target, 1);
        for (int i = 0; i < e; ++i) pw *= base;
        it = powers.emplace(key, std::move(pw)).first;
      }
      term *= it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace fricke
