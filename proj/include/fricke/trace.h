#pragma once

#include "fricke/poly.h"
#include "fricke/word.h"

namespace fricke {

// The trace polynomial of w: the canonical element of Q[t_i, t_ij] whose
// value at any SL(2) representation of the group equals tr rho(w).
//
// Exponents are brought into {0,1} by the three-term recursion
//   tr(x_i^a R) = (tr x_i) tr(x_i^{a-1} R) - tr(x_i^{a-2} R),
// run on the lowest-index generator whose |exponent| is maximal among those
// outside {0,1} (negative exponents use the same relation read upward).
// Words with 0/1 exponents and support of size >= 3 split off their two
// lowest generators through the abelian three-factor product formula.
Poly char_abelian(const AbelianWord& w);

// tr' w = tr w - 2, written in the shifted variables; 0 for the identity.
Poly char_abelian_shifted(const AbelianWord& w);

// Shifted traces of one- and two-generator products as polynomials in t':
// tr' x_i, and tr' x_i x_j, which is t'_{ji} when i > j and
// (t'_i)^2 + 4 t'_i when i == j.
Poly shifted_single_char(int i);
Poly shifted_pair_char(int i, int j);

}  // namespace fricke
