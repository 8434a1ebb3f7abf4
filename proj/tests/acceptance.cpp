// Acceptance suite: runs each top-level criterion exactly (zero tolerance,
// all arithmetic over the rationals) and prints one pass/fail line per
// criterion, with wall time checked against the stated budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "fricke/aut.h"
#include "fricke/graded.h"
#include "fricke/ideal.h"
#include "fricke/identities.h"
#include "fricke/oracle.h"
#include "fricke/trace.h"

#include "support.h"

using namespace fricke;
using fricke::testing::basis_series_matrix;
using fricke::testing::is_plus_minus_identity;
using fricke::testing::random_unimodular;

namespace {

int g_failures = 0;

void criterion(int number, const char* name, double budget_seconds,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("[FAIL] criterion %2d: %s -- exception: %s\n", number, name, e.what());
    ++g_failures;
    return;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= budget_seconds) {
    std::printf("[FAIL] criterion %2d: %s -- over budget (%.2fs >= %.0fs)\n", number, name,
                elapsed, budget_seconds);
    ++g_failures;
    return;
  }
  std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, name, elapsed);
  if (!ok) ++g_failures;
}

bool vogt_suite() {
  for (auto id : {TraceIdentity::InverseTrace, TraceIdentity::CyclicTrace, TraceIdentity::ProductInverseSum,
                  TraceIdentity::TripleSwap, TraceIdentity::CommutatorTrace, TraceIdentity::QuadExpansion})
    if (!verify_vogt(id, kDefaultSeed, 100)) return false;
  return true;
}

bool ideal_generator_vanishing() {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : ideal_generators(n)) {
      if (!laurent_image(g.poly, n).is_zero()) return false;
      if (!normal_form(g.poly).is_zero()) return false;
      if (n == 1 && !g.is_trivial()) return false;
    }
  }
  return true;
}

bool basis_dimension_reproduction() {
  if (dim_gr(2, 1) != 3 || dim_gr(2, 2) != 5 || dim_gr(3, 2) != 15) return false;
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 6; ++k)
      if (Int(basis(n, k).size()) != dim_gr(n, k)) return false;
  return true;
}

bool independence_certificate() {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k)
      if (exact_rank(basis_series_matrix(n, k)) != basis(n, k).size()) return false;
  return true;
}

bool spanning_certificate() {
  for (int n = 1; n <= 3; ++n) {
    std::vector<VarId> vars;
    for (int i = 1; i <= n; ++i) vars.push_back(VarId::single(i));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) vars.push_back(VarId::pair(i, j));
    bool ok = true;
    std::function<void(size_t, Monomial)> visit = [&](size_t from, Monomial m) {
      if (!ok) return;
      if (m.degree() > 0) {
        Poly p = Poly::monomial(Coord::TPrime, m, 1);
        Poly nf = normal_form(p).poly();
        if (nf.min_degree() < m.degree()) ok = false;  // nothing below the weight
        for (const auto& [mono, c] : nf.terms())
          if (!is_basis_monomial(mono)) ok = false;
        if (normal_form(nf).poly() != nf) ok = false;  // idempotent
        if (!laurent_image(p - nf, n).is_zero()) ok = false;
      }
      if (m.degree() == 4) return;
      for (size_t i = from; i < vars.size(); ++i) visit(i, m.times(vars[i]));
    };
    visit(0, Monomial::unit());
    if (!ok) return false;
  }
  return true;
}

bool weight_additivity_and_domain() {
  RationalSampler sampler(kDefaultSeed);
  int done = 0;
  while (done < 200) {
    int n = 2 + static_cast<int>(done % 2);  // ranks 2 and 3
    NormalForm p = normal_form(sampler.poly(Coord::TPrime, n, 3, 4));
    NormalForm q = normal_form(sampler.poly(Coord::TPrime, n, 3, 4));
    if (p.is_zero() || q.is_zero()) continue;
    ++done;
    NormalForm prod = ring_mul_normalized(p, q);
    if (prod.is_zero()) return false;  // a zero divisor would contradict primeness
    if (*weight(prod.poly()) != *weight(p.poly()) + *weight(q.poly())) return false;
  }
  return true;
}

bool power_congruence() {
  Poly t1 = Poly::var(Coord::TPrime, VarId::single(1));
  for (long long a = -10; a <= 10; ++a) {
    if (a == 0) continue;
    Poly defect = char_abelian_shifted(AbelianWord({a})) - Rational(a * a) * t1;
    auto w = weight(defect);
    if (w.has_value() && *w < 2) return false;
  }
  return true;
}

bool automorphism_suite() {
  // iota acts trivially on every J/J^{k+1}
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 5; ++k)
      if (!in_E_k(iota(n), k)) return false;

  // elementary transvections and non-identity permutations act nontrivially
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && in_E_k(Automorphism::transvection(n, i, j), 1)) return false;
    std::vector<int> perm(n);
    for (int d = 0; d < n; ++d) perm[d] = d + 1;
    do {
      bool is_id = true;
      for (int d = 0; d < n; ++d) is_id = is_id && perm[d] == d + 1;
      if (!is_id && in_E_k(Automorphism::permutation(perm), 1)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // 50 random unimodular matrices away from +-identity
  RationalSampler sampler(kDefaultSeed);
  int tested = 0;
  while (tested < 50) {
    int n = 2 + static_cast<int>(sampler.below(3));  // ranks 2..4
    Automorphism sigma = random_unimodular(sampler, n);
    if (is_plus_minus_identity(sigma)) continue;
    ++tested;
    if (in_E_k(sigma, 1)) return false;
  }

  // well-definedness: 20 random automorphisms map the ideal into itself
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 3;  // ranks 2, 3, 4
    Automorphism sigma = random_unimodular(sampler, n, 4);
    for (const auto& g : ideal_generators(n))
      if (!normal_form(act_on_poly(sigma, g.poly)).is_zero()) return false;
  }
  return true;
}

bool oracle_agreement() {
  RationalSampler sampler(kDefaultSeed);
  std::vector<Rational> lambdas = {2, 3, 5, 7};
  RepAssignment rep = diagonal_rep(lambdas);
  for (int t = 0; t < 100; ++t) {
    Poly p = sampler.poly(t % 2 ? Coord::T : Coord::TPrime, 4, 3, 6);
    LaurentPoly li = laurent_image(p, 4);
    Rational direct = p.eval([&](VarId v) {
      AbelianWord w = v.is_pair() ? AbelianWord::generator(4, v.first()) *
                                        AbelianWord::generator(4, v.second())
                                  : AbelianWord::generator(4, v.first());
      Rational tr = eval_word_trace(w, rep);
      return p.coord() == Coord::TPrime ? tr - 2 : tr;
    });
    if (li.eval(lambdas) != direct) return false;
    if (series_image(p, 4, 6) != expand_at_one_minus_s(li, 6)) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "trace identity suite, 100 random SL(2,Q) tuples each", 5.0, vogt_suite);
  criterion(2, "rank-3 kernel relation, 100 random triples", 5.0,
            [] { return verify_f3_kernel(kDefaultSeed, 100); });
  criterion(3, "ideal generators vanish (oracle and normal form), n <= 4", 30.0,
            ideal_generator_vanishing);
  criterion(4, "basis size equals closed dimension formula, n <= 5, k <= 6", 10.0,
            basis_dimension_reproduction);
  criterion(5, "independence certificate: full rank of series matrix, n <= 3, k <= 4",
            60.0, independence_certificate);
  criterion(6, "spanning certificate on all monomials of degree <= 4, n <= 3", 60.0,
            spanning_certificate);
  criterion(7, "weight additivity and no zero divisors, 200 random pairs", 120.0,
            weight_additivity_and_domain);
  criterion(8, "power congruence tr' x^a = a^2 tr' x mod J^2, |a| <= 10", 5.0,
            power_congruence);
  criterion(9, "automorphism filtration suite", 120.0, automorphism_suite);
  criterion(10, "oracle agreement: laurent vs matrices, series vs laurent", 30.0,
            oracle_agreement);
  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures;
}
