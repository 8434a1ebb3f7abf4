#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fricke/poly.h"

namespace fricke {

// A degree-k basis monomial of gr^k(J): interlacing pair factors
// t'_{p1 q1} ... t'_{pl ql} with p1 < q1 < p2 < q2 < ... < pl < ql, times a
// multiset of single factors.
struct BasisMonomial {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> singles;  // non-decreasing

  int degree() const { return static_cast<int>(pairs.size() + singles.size()); }
  Monomial monomial() const;
  Poly poly() const;  // t' coordinates
  std::string str() const;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

// All basis monomials of degree k for rank n, ordered by: number of pairs
// ascending, then lex on the flattened pair indices, then lex on singles.
std::vector<BasisMonomial> basis(int n, int k);

// dim gr^k(J) by the closed formula sum_l C(n,2l) C(n+k-l-1, k-l).
Int dim_gr(int n, int k);

struct weight_precondition_error : std::invalid_argument {
  explicit weight_precondition_error(std::optional<int> actual_weight, int k);
  std::optional<int> actual;  // nullopt: the element lies in I
  int required;
};

// The class of p in gr^k(J) as coefficients over basis(n, k). Requires
// weight(p) >= k, else throws weight_precondition_error with the actual
// weight. Accepts either coordinate tag.
std::vector<Rational> graded_component(const Poly& p, int n, int k);

// Exact row rank by fraction-free (Bareiss) elimination after clearing
// denominators row-wise. Consumes the matrix.
size_t exact_rank(std::vector<std::vector<Rational>> rows);

}  // namespace fricke
