#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/rational.h"

namespace fricke {

// Element of SL(2, Q): determinant is checked to be exactly 1 on
// construction.
class Matrix2 {
 public:
  Matrix2(Rational a, Rational b, Rational c, Rational d);
  static Matrix2 identity() { return Matrix2(1, 0, 0, 1); }
  static Matrix2 diagonal(const Rational& lambda);  // diag(l, 1/l), l != 0

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational trace() const { return a_ + d_; }
  Matrix2 inverse() const;  // adjugate, since det = 1
  Matrix2 pow(long long e) const;
  bool commutes_with(const Matrix2& other) const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;

  std::string str() const;

 private:
  Rational a_, b_, c_, d_;
};

// An assignment of matrices to the group generators. When
// commuting_required is set the constructor checks all pairs commute
// exactly (abelian words may only be evaluated against such assignments).
class RepAssignment {
 public:
  RepAssignment(std::vector<Matrix2> matrices, bool commuting_required);
  int rank() const { return static_cast<int>(matrices_.size()); }
  bool commuting_required() const { return commuting_required_; }
  const Matrix2& matrix(int i) const { return matrices_.at(i - 1); }  // 1-based
  const std::vector<Matrix2>& matrices() const { return matrices_; }

 private:
  std::vector<Matrix2> matrices_;
  bool commuting_required_;
};

}  // namespace fricke
