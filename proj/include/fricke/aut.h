#pragma once

#include <vector>

#include "fricke/poly.h"
#include "fricke/word.h"

namespace fricke {

// An automorphism of the free abelian group of rank n: an integer matrix
// with determinant +1 or -1, acting on words by x_i -> row i (as an
// exponent vector). Any unimodular matrix is accepted.
class Automorphism {
 public:
  Automorphism(int n, std::vector<long long> row_major_entries);
  static Automorphism identity(int n);
  // x_i -> x_i x_j for i != j.
  static Automorphism transvection(int n, int i, int j);
  // x_i -> x_{perm[i-1]}; perm is 1-based images.
  static Automorphism permutation(const std::vector<int>& perm);

  int rank() const { return n_; }
  long long entry(int i, int j) const { return m_.at((i - 1) * n_ + (j - 1)); }
  Int det() const;
  AbelianWord image_of_generator(int i) const;  // row i

  // Right action: (x^this)^then, i.e. the matrix product this * then.
  Automorphism compose(const Automorphism& then) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  std::string str() const;

 private:
  int n_;
  std::vector<long long> m_;  // row-major
};

// The inversion automorphism x_i -> x_i^{-1} (minus the identity matrix).
Automorphism iota(int n);

// Image of a generator variable under sigma: the shifted trace polynomial
// of x_i^sigma (Single) or x_i^sigma x_j^sigma (Pair). Always t' coordinates.
Poly act_on_generator(const Automorphism& sigma, VarId v);

// Ring-homomorphic extension of act_on_generator; the result carries the
// same coordinate tag as p.
Poly act_on_poly(const Automorphism& sigma, const Poly& p);

// Does sigma act trivially on J/J^{k+1}? Checked on generators: every
// variable v must satisfy weight(v^sigma - v) >= k + 1. This suffices: a
// degree->=1 basis monomial moves by a telescoping sum of products in which
// each term replaces one factor v by (v^sigma - v), keeping total weight
// >= k + 1.
bool in_E_k(const Automorphism& sigma, int k);

}  // namespace fricke
