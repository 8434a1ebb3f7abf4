#include "fricke/matrix2.h"

#include <sstream>

namespace fricke {

Matrix2::Matrix2(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1)
    throw std::invalid_argument("Matrix2: determinant must be exactly 1");
}

Matrix2 Matrix2::diagonal(const Rational& lambda) {
  if (lambda == 0) throw std::invalid_argument("Matrix2::diagonal: zero eigenvalue");
  return Matrix2(lambda, 0, 0, Rational(1) / lambda);
}

Matrix2 Matrix2::inverse() const { return Matrix2(d_, -b_, -c_, a_); }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return Matrix2(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                 x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

Matrix2 Matrix2::pow(long long e) const {
  Matrix2 base = e >= 0 ? *this : inverse();
  unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-e);
  Matrix2 out = identity();
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

bool Matrix2::commutes_with(const Matrix2& other) const {
  return *this * other == other * *this;
}

std::string Matrix2::str() const {
  std::ostringstream out;
  out << "[[" << to_string(a_) << "," << to_string(b_) << "],[" << to_string(c_)
      << "," << to_string(d_) << "]]";
  return out.str();
}

RepAssignment::RepAssignment(std::vector<Matrix2> matrices, bool commuting_required)
    : matrices_(std::move(matrices)), commuting_required_(commuting_required) {
  if (commuting_required_) {
    for (size_t i = 0; i < matrices_.size(); ++i)
      for (size_t j = i + 1; j < matrices_.size(); ++j)
        if (!matrices_[i].commutes_with(matrices_[j]))
          throw std::invalid_argument("RepAssignment: matrices do not commute");
  }
}

}  // namespace fricke
