#include <doctest.h>

#include "fricke/ideal.h"
#include "fricke/oracle.h"
#include "fricke/trace.h"

using namespace fricke;

namespace {

Poly tp(int i) { return Poly::var(Coord::TPrime, VarId::single(i)); }
Poly tpp(int i, int j) { return Poly::var(Coord::TPrime, VarId::pair(i, j)); }

}  // namespace

TEST_CASE("basis monomial recognition") {
  CHECK(is_basis_monomial(Monomial::unit()));
  CHECK(is_basis_monomial(Monomial::var(VarId::single(1)).times(VarId::single(2), 2)));
  CHECK(is_basis_monomial(Monomial::var(VarId::pair(1, 2)).times(VarId::pair(3, 4))));
  CHECK(is_basis_monomial(Monomial::var(VarId::pair(1, 2)).times(VarId::single(1), 5)));
  CHECK_FALSE(is_basis_monomial(Monomial::var(VarId::pair(1, 2), 2)));         // square
  CHECK_FALSE(is_basis_monomial(Monomial::var(VarId::pair(1, 3)).times(VarId::pair(2, 4))));  // crossing
  CHECK_FALSE(is_basis_monomial(Monomial::var(VarId::pair(1, 4)).times(VarId::pair(2, 3))));  // nesting
  CHECK_FALSE(is_basis_monomial(Monomial::var(VarId::pair(1, 2)).times(VarId::pair(1, 3))));  // shared
  CHECK_FALSE(is_basis_monomial(Monomial::var(VarId::pair(1, 2)).times(VarId::pair(2, 3))));  // shared
}

TEST_CASE("generator for distinct indices matches the printed element") {
  // Transcription of the generating element at (i,j,r,s) = (1,2,3,4).
  Poly expected = tpp(1, 3) * tpp(2, 4) - tpp(1, 4) * tpp(2, 3);
  expected -= tp(1) * tp(3) + tp(2) * tp(4) - tp(2) * tp(3) - tp(1) * tp(4);
  expected += tp(1) * tpp(2, 3) + tp(2) * tpp(1, 4) + tp(3) * tpp(1, 4) +
              tp(4) * tpp(2, 3) - tp(2) * tpp(1, 3) - tp(1) * tpp(2, 4) -
              tp(3) * tpp(2, 4) - tp(4) * tpp(1, 3);
  Poly cubic = tp(2) * tp(3) * tpp(1, 4) + tp(1) * tp(4) * tpp(2, 3) -
               tp(1) * tp(3) * tpp(2, 4) - tp(2) * tp(4) * tpp(1, 3);
  cubic /= Rational(2);
  expected += cubic;

  auto gens = ideal_generators(4);
  bool found = false;
  for (const auto& g : gens) {
    if (g.i == 1 && g.j == 2 && g.r == 3 && g.s == 4) {
      found = true;
      CHECK(g.poly == expected);
      CHECK(g.poly.term_count() == 18);
    }
  }
  CHECK(found);
}

TEST_CASE("rank one: the ideal vanishes") {
  auto gens = ideal_generators(1);
  CHECK(gens.size() == 1);
  for (const auto& g : gens) CHECK(g.is_trivial());
  CHECK_THROWS_AS(ideal_generators(0), std::invalid_argument);
}

TEST_CASE("all generators reduce to zero and vanish under the oracle") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : ideal_generators(n)) {
      CHECK(laurent_image(g.poly, n).is_zero());
      CHECK(normal_form(g.poly).is_zero());
    }
  }
}

TEST_CASE("normal form fixes basis-supported polynomials") {
  Poly p = tp(1) * tp(2) * tp(2);
  CHECK(normal_form(p).poly() == p);
  Poly q = tpp(1, 2) * tp(1) + Rational(1, 2) * tp(3);
  CHECK(normal_form(q).poly() == q);
  Poly sq = char_abelian_shifted(AbelianWord({2, 0}));
  CHECK(normal_form(sq).poly() == tp(1) * tp(1) + Rational(4) * tp(1));
}

TEST_CASE("every squared pair variable rewrites soundly") {
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      Poly sq = tpp(a, b) * tpp(a, b);
      Poly nf = normal_form(sq).poly();
      CHECK(laurent_image(sq - nf, 4).is_zero());
      for (const auto& [m, c] : nf.terms()) CHECK(is_basis_monomial(m));
    }
}

TEST_CASE("normal form requires shifted coordinates") {
  CHECK_THROWS_AS(normal_form(Poly::var(Coord::T, VarId::single(1))), coord_mismatch);
}

TEST_CASE("crossing product rewrites onto the consecutive pairing") {
  Poly crossing = tpp(1, 3) * tpp(2, 4);
  Poly nf = normal_form(crossing).poly();
  // leading two-pair part is exactly t'_12 t'_34 ...
  for (const auto& [m, c] : nf.terms()) {
    CHECK(is_basis_monomial(m));
    if (m.pair_degree() == 2) {
      CHECK(m == Monomial::var(VarId::pair(1, 2)).times(VarId::pair(3, 4)));
      CHECK(c == 1);
    }
  }
  // ... and the rewrite is an exact relation of the ideal.
  CHECK(laurent_image(crossing - nf, 4).is_zero());
}

TEST_CASE("membership in the ideal") {
  CHECK_FALSE(is_in_ideal(tp(1)));
  CHECK(is_in_ideal(pair_swap_relation(1, 2, 3, 4)));
  CHECK(is_in_ideal(tpp(1, 3) * tpp(2, 4) - pair_swap_rhs(1, 2, 3, 4)));
  CHECK(is_in_ideal(Poly::zero(Coord::TPrime)));
  // t coordinates are shifted internally
  CHECK(is_in_ideal(shift_coordinates(pair_swap_relation(1, 2, 1, 2), Coord::T)));
}

TEST_CASE("coset equality") {
  Poly p = tp(1) * tpp(2, 3);
  CHECK(equal_mod_I(p, p));
  CHECK(equal_mod_I(tpp(1, 3) * tpp(2, 4), pair_swap_rhs(1, 2, 3, 4)));
  CHECK_FALSE(equal_mod_I(tp(1), tp(2)));
  // mixed coordinates are fine
  CHECK(equal_mod_I(shift_coordinates(p, Coord::T), p));
}

TEST_CASE("weight") {
  CHECK(weight(Poly::zero(Coord::TPrime)) == std::nullopt);
  CHECK(weight(Poly::constant(Coord::TPrime, 5)) == 0);
  // t coordinates shift internally; tr x_1 = t'_1 + 2 has a constant part
  CHECK(weight(Poly::var(Coord::T, VarId::single(1))) == 0);
  for (long long a = -10; a <= 10; ++a) {
    if (a == 0) continue;
    CHECK(weight(char_abelian_shifted(AbelianWord({a, 0}))) == 1);
  }
  CHECK(weight(tpp(1, 2) * tp(1) + tp(1) * tp(2) * tp(3)) == 2);
}

TEST_CASE("normalized multiplication") {
  NormalForm a = normal_form(tp(1));
  NormalForm b = normal_form(tp(2));
  CHECK(ring_mul_normalized(a, b).poly() == tp(1) * tp(2));
  NormalForm v = normal_form(tpp(1, 2));
  Poly pair_square_rhs = -(tp(1) * tp(1)) - tp(2) * tp(2) +
                   Rational(2) * (tp(1) * tp(2) + tp(1) * tpp(1, 2) + tp(2) * tpp(1, 2)) +
                   tp(1) * tp(2) * tpp(1, 2);
  CHECK(ring_mul_normalized(v, v).poly() == pair_square_rhs);
}

TEST_CASE("idempotence and oracle soundness on random polynomials") {
  RationalSampler sampler(kDefaultSeed);
  for (int t = 0; t < 30; ++t) {
    int n = static_cast<int>(sampler.range(2, 4));
    Poly p = sampler.poly(Coord::TPrime, n, 4, 6);
    Poly nf = normal_form(p).poly();
    CHECK(normal_form(nf).poly() == nf);
    CHECK(laurent_image(p - nf, n).is_zero());
    for (const auto& [m, c] : nf.terms()) CHECK(is_basis_monomial(m));
  }
}

TEST_CASE("rewrite order fuzzing yields the same canonical form") {
  RationalSampler sampler(31337);
  for (int t = 0; t < 15; ++t) {
    int n = static_cast<int>(sampler.range(3, 4));
    Poly p = sampler.poly(Coord::TPrime, n, 4, 5);
    Poly reference = normal_form(p).poly();
    for (int variant = 0; variant < 4; ++variant) {
      std::mt19937_64 eng(1000 * t + variant);
      auto chooser = [&eng](size_t options) { return static_cast<size_t>(eng() % options); };
      CHECK(normal_form_with_chooser(p, chooser) == reference);
    }
  }
}

TEST_CASE("desk-scale completeness: zero normal form iff zero oracle image") {
  // Combinations of bounded-degree polynomials mixed with actual ideal
  // elements, so both directions of the equivalence get exercised.
  RationalSampler sampler(777);
  for (int n = 2; n <= 3; ++n) {
    auto gens = ideal_generators(n);
    for (int t = 0; t < 30; ++t) {
      Poly p = sampler.poly(Coord::TPrime, n, 3, 4);
      if (t % 2 == 0) {
        const auto& g = gens[sampler.below(static_cast<long long>(gens.size()))];
        p = p * g.poly;  // a multiple of a generator: must be in the ideal
      }
      CHECK(normal_form(p).is_zero() == laurent_image(p, n).is_zero());
    }
  }
}

TEST_CASE("weight additivity and no zero divisors on random pairs") {
  RationalSampler sampler(271);
  int done = 0;
  while (done < 40) {
    Poly p = sampler.poly(Coord::TPrime, 3, 3, 3);
    Poly q = sampler.poly(Coord::TPrime, 3, 3, 3);
    NormalForm np = normal_form(p), nq = normal_form(q);
    if (np.is_zero() || nq.is_zero()) continue;
    ++done;
    NormalForm prod = ring_mul_normalized(np, nq);
    REQUIRE_FALSE(prod.is_zero());
    CHECK(*weight(prod.poly()) == *weight(np.poly()) + *weight(nq.poly()));
  }
}

TEST_CASE("weight never exceeds the total degree of a nonzero normal form") {
  RationalSampler sampler(4242);
  for (int t = 0; t < 30; ++t) {
    Poly p = sampler.poly(Coord::TPrime, 3, 4, 5);
    NormalForm nf = normal_form(p);
    if (nf.is_zero()) continue;
    auto w = weight(p);
    REQUIRE(w.has_value());
    CHECK(*w <= nf.poly().total_degree());
  }
}
