#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "fricke/monomial.h"
#include "fricke/rational.h"

namespace fricke {

// Whether a polynomial is written in the plain trace variables t or the
// shifted variables t' = t - 2. The tag is data, not convention: operations
// on mismatched tags throw instead of silently coercing.
enum class Coord { T, TPrime };

struct coord_mismatch : std::logic_error {
  coord_mismatch() : std::logic_error("polynomial coordinate mismatch (t vs t')") {}
};

class Poly {
 public:
  explicit Poly(Coord c = Coord::TPrime) : coord_(c) {}
  static Poly zero(Coord c) { return Poly(c); }
  static Poly constant(Coord c, const Rational& r);
  static Poly var(Coord c, VarId v, int exp = 1);
  static Poly monomial(Coord c, const Monomial& m, const Rational& coef);

  Coord coord() const { return coord_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  size_t term_count() const { return terms_.size(); }

  int total_degree() const;  // -1 for the zero polynomial
  int min_degree() const;    // -1 for the zero polynomial
  int max_index() const;     // largest generator index used, 0 if none

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& r);
  Poly& operator/=(const Rational& r);
  Poly& add_term(const Monomial& m, const Rational& coef);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
  friend Poly operator*(const Rational& r, Poly a) { return a *= r; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Exact evaluation, substituting values(v) for each variable.
  Rational eval(const std::function<Rational(VarId)>& values) const;

  std::string str() const;

 private:
  void check_coord(const Poly& other) const {
    if (coord_ != other.coord_) throw coord_mismatch();
  }
  Coord coord_;
  std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

// Rewrites p in the other coordinate system by substituting t = t' + 2
// (or t' = t - 2); a no-op when p is already in `target`. Ring isomorphism,
// and an involution when applied twice.
Poly shift_coordinates(const Poly& p, Coord target);

}  // namespace fricke
