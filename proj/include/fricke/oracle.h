#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "fricke/laurent.h"
#include "fricke/matrix2.h"
#include "fricke/poly.h"
#include "fricke/series.h"
#include "fricke/word.h"

namespace fricke {

// Default seed for every randomized check; documented in the README so runs
// are reproducible by construction.
inline constexpr std::uint64_t kDefaultSeed = 271828;

// Evaluation at the diagonal representations x_i -> diag(lambda_i, 1/lambda_i):
// t_i -> lambda_i + lambda_i^{-1}, t_ij -> lambda_i lambda_j + (lambda_i lambda_j)^{-1},
// with the shifted variables lowered by 2. A ring homomorphism whose kernel
// contains I, so a zero image certifies relations.
LaurentPoly laurent_image(const Poly& p, int n);

// The same evaluation after lambda_i = 1 - s_i, expanded exactly to total
// degree <= order. tr' x_i becomes s_i^2 + s_i^3 + ..., so weight-k elements
// start in degree 2k.
TruncatedSeries series_image(const Poly& p, int n, int order);

// Expands an exact Laurent polynomial at lambda = 1 - s to the given order.
TruncatedSeries expand_at_one_minus_s(const LaurentPoly& lp, int order);

// Exact trace of the matrix image of the word. Abelian words require a
// commuting assignment (throws std::invalid_argument otherwise); negative
// exponents go through the exact inverse.
Rational eval_word_trace(const AbelianWord& w, const RepAssignment& rep);
Rational eval_word_trace(const FreeWord& w, const RepAssignment& rep);

// Deterministic bounded-rational sampling on top of mt19937_64. The raw
// engine output is reduced directly so streams do not depend on the
// standard library's distribution implementations.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : eng_(seed) {}
  long long below(long long bound);                 // uniform in [0, bound)
  long long range(long long lo, long long hi);      // uniform in [lo, hi]
  Rational bounded(bool nonzero);                   // numer in [-4,4], denom in {1,2,3}
  Matrix2 sl2();                                    // a != 0, d = (1+bc)/a
  // Random t'/t polynomial: up to max_terms monomials of total degree
  // <= max_degree in the rank-n variables, small rational coefficients.
  Poly poly(Coord coord, int n, int max_degree, int max_terms);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

std::vector<Matrix2> sample_sl2(std::uint64_t seed, int count);

enum class CommutingKind { Diagonal, UnipotentSigned };
RepAssignment sample_commuting_family(std::uint64_t seed, int n, CommutingKind kind);
// The diagonal assignment for explicit eigenvalues.
RepAssignment diagonal_rep(const std::vector<Rational>& lambdas);

// The trace relations that hold in SL(2) for arbitrary (non-commuting)
// tuples: inverse and cyclic invariance, the product-inverse sum, Vogt's
// three- and four-element expansions, and the commutator trace formula.
enum class TraceIdentity {
  InverseTrace,        // tr x^{-1} = tr x
  CyclicTrace,         // tr xy = tr yx
  ProductInverseSum,   // tr xy + tr xy^{-1} = tr x tr y
  TripleSwap,          // tr xyz + tr yxz expansion
  CommutatorTrace,     // tr [x,y] expansion
  QuadExpansion,       // 2 tr xyzw expansion
};
TraceIdentity trace_identity_from_name(std::string_view name);

// Checks the identity exactly on `trials` seeded random SL(2,Q) tuples.
bool verify_vogt(TraceIdentity id, std::uint64_t seed, int trials);

// The rank-3 free-group kernel relation: for random triples (X, Y, Z),
// (tr XYZ)^2 - P (tr XYZ) + Q = 0 with P, Q evaluated from the single and
// pairwise traces.
bool verify_f3_kernel(std::uint64_t seed, int trials);

}  // namespace fricke
