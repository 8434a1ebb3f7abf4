#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fricke/poly.h"

namespace fricke {

// One defining element of the relation ideal I, indexed by the quadruple
// (i, j, r, s) it was instantiated at. Identically-zero instances (for
// example every quadruple when n = 1) stay in the list, tagged trivial, so
// coverage over all quadruples is auditable.
struct IdealGenerator {
  int i, j, r, s;
  Poly poly;  // t' coordinates
  bool is_trivial() const { return poly.is_zero(); }
};

// All generators of I for rank n, one per quadruple in {1..n}^4.
std::vector<IdealGenerator> ideal_generators(int n);

// The partner-swap relation instantiated at generators x_a, x_b, x_c, x_d
// (indices need not be distinct):
//   tr'(x_a x_c) tr'(x_b x_d) - [right-hand side with partners swapped].
// Always lies in I; ideal_generators(n) is exactly this over all quadruples.
Poly pair_swap_relation(int a, int b, int c, int d);
// The right-hand side alone (what the leading product rewrites to).
Poly pair_swap_rhs(int a, int b, int c, int d);

// Is every Pair variable square-free with the pair indices interlacing
// (p1 < q1 < p2 < q2 < ...)? Single variables are unconstrained.
bool is_basis_monomial(const Monomial& m);

// Canonical coset representative: a t'-polynomial supported on basis
// monomials only. Two cosets of I are equal iff their NormalForm polys are.
class NormalForm {
 public:
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  friend NormalForm normal_form(const Poly&);
  friend NormalForm ring_mul_normalized(const NormalForm&, const NormalForm&);
  explicit NormalForm(Poly p) : poly_(std::move(p)) {}
  Poly poly_;
};

// Rewrites p (t' coordinates; throws coord_mismatch otherwise) onto the
// basis monomials. Deterministic and independent of rewrite order; each
// step instantiates a relation of I, so the coset is preserved.
NormalForm normal_form(const Poly& p);

// Membership in I = Ker(pi); accepts either coordinate tag.
bool is_in_ideal(const Poly& p);

// Coset equality in P/I; accepts mixed coordinate tags.
bool equal_mod_I(const Poly& p, const Poly& q);

// The filtration weight: k such that the class of p lies in J^k \ J^{k+1},
// read off as the minimal total degree of the normal form. std::nullopt
// encodes infinity (p in I). Accepts either coordinate tag.
std::optional<int> weight(const Poly& p);

NormalForm ring_mul_normalized(const NormalForm& p, const NormalForm& q);

// Test hook: same rewriting with the offending feature of each monomial
// chosen by `choose(option_count)` instead of the fixed priority. Any
// choice sequence must yield the identical canonical result.
using RewriteChooser = std::function<size_t(size_t)>;
Poly normal_form_with_chooser(const Poly& p, const RewriteChooser& choose);

}  // namespace fricke
