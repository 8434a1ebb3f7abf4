#pragma once

#include <string_view>
#include <vector>

#include "fricke/word.h"

namespace fricke {

// Shifted-trace identities checkable on abelian words. The first three hold
// in any group; the swap and square identities are specific to commuting
// elements; PowerCongruence is the congruence tr' x^a = a^2 tr' x (mod J^2),
// quantified over a in [-10, 10].
enum class ShiftedIdentity {
  ProductInverseSum,  // tr' xy + tr' xy^{-1} expansion
  TripleProduct,      // tr' xyz + tr' yxz expansion
  QuadProduct,        // 2 tr' xyzw expansion
  ProductSwap,        // (tr' xz)(tr' yw) rewritten with swapped partners
  SharedFactorSwap,   // (tr' xy)(tr' xz), the swap with a repeated element
  PairSquare,         // (tr' xy)^2 expansion
  PowerCongruence,    // tr' x^a = a^2 tr' x mod J^2
};

ShiftedIdentity shifted_identity_from_name(std::string_view name);
int identity_arity(ShiftedIdentity id);

// Substitutes the shifted trace polynomials of the words (and the needed
// products/inverses) into both sides and decides equality in P/I;
// PowerCongruence instead checks that the difference has weight >= 2.
// Throws on arity mismatch or mixed ranks.
bool verify_shifted_identity(ShiftedIdentity id, const std::vector<AbelianWord>& words);

}  // namespace fricke
