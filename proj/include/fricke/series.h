#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/rational.h"

namespace fricke {

// Power series in s_1..s_n truncated by total degree: every stored term has
// total degree <= order, and multiplication discards anything above it.
class TruncatedSeries {
 public:
  TruncatedSeries(int nvars, int order);
  static TruncatedSeries constant(int nvars, int order, const Rational& r);
  static TruncatedSeries term(int nvars, int order, std::vector<int> exps,
                              const Rational& coef);
  // 1 + s_i + s_i^2 + ... up to the order.
  static TruncatedSeries geometric(int nvars, int order, int var_index);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  // Smallest total degree with a nonzero term; -1 when zero.
  int min_degree() const;
  // The homogeneous part of total degree d.
  TruncatedSeries component(int d) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string str() const;

 private:
  void check_compat(const TruncatedSeries& other) const;
  int nvars_;
  int order_;
  std::map<std::vector<int>, Rational> terms_;
};

}  // namespace fricke
