#include "fricke/ideal.h"

#include <map>
#include <set>

#include "fricke/trace.h"

namespace fricke {

namespace {

Poly half(Poly p) {
  p /= Rational(2);
  return p;
}

}  // namespace

Poly pair_swap_rhs(int x, int y, int z, int w) {
  auto S = shifted_single_char;
  auto P = shifted_pair_char;
  Poly rhs = P(x, w) * P(y, z);
  rhs += S(x) * S(z) + S(y) * S(w) - S(y) * S(z) - S(x) * S(w);
  rhs -= S(x) * P(y, z) + S(y) * P(x, w) + S(z) * P(x, w) + S(w) * P(y, z) -
         S(y) * P(x, z) - S(x) * P(y, w) - S(z) * P(y, w) - S(w) * P(x, z);
  rhs -= half(S(y) * S(z) * P(x, w) + S(x) * S(w) * P(y, z) -
              S(x) * S(z) * P(y, w) - S(y) * S(w) * P(x, z));
  return rhs;
}

Poly pair_swap_relation(int a, int b, int c, int d) {
  return shifted_pair_char(a, c) * shifted_pair_char(b, d) - pair_swap_rhs(a, b, c, d);
}

std::vector<IdealGenerator> ideal_generators(int n) {
  if (n < 1) throw std::invalid_argument("ideal_generators: rank must be >= 1");
  std::vector<IdealGenerator> gens;
  gens.reserve(static_cast<size_t>(n) * n * n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
          gens.push_back({i, j, r, s, pair_swap_relation(i, j, r, s)});
  return gens;
}

bool is_basis_monomial(const Monomial& m) {
  int last = 0;
  for (const auto& [v, e] : m.exponents()) {
    if (!v.is_pair()) continue;
    if (e != 1) return false;
    // Pairs arrive in lex order, so interlacing reduces to each pair's
    // indices sitting strictly above everything seen so far.
    if (v.first() <= last) return false;
    last = v.second();
  }
  return true;
}

namespace {

// One way a monomial can fail to be a basis monomial, together with the
// relation that removes it.
struct Offence {
  enum Kind { Square, Shared, Crossing, Nesting } kind;
  VarId p1, p2;  // Square: p1 == p2
};

std::vector<Offence> offences(const Monomial& m) {
  std::vector<Offence> out;
  std::vector<VarId> pairs;
  for (const auto& [v, e] : m.exponents()) {
    if (!v.is_pair()) continue;
    if (e >= 2) out.push_back({Offence::Square, v, v});
    pairs.push_back(v);
  }
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      const VarId& p = pairs[a];
      const VarId& q = pairs[b];
      std::set<int> all{p.first(), p.second(), q.first(), q.second()};
      if (all.size() < 4) {
        out.push_back({Offence::Shared, p, q});
        continue;
      }
      // p precedes q in lex order, so p.first() is the smallest index.
      if (q.first() < p.second() && p.second() < q.second())
        out.push_back({Offence::Crossing, p, q});
      else if (q.second() < p.second())
        out.push_back({Offence::Nesting, p, q});
      // otherwise p.second() < q.first(): consecutive, fine
    }
  return out;
}

// The polynomial the offending product rewrites to. Every term has either
// fewer Pair factors (Square/Shared, via the squared-trace expansion or the
// shared-element product swap) or the same count with strictly smaller
// total pair spread (Crossing/Nesting to the consecutive pairing), which is
// the termination measure.
Poly replacement(const Offence& off) {
  switch (off.kind) {
    case Offence::Square: {
      int a = off.p1.first(), b = off.p1.second();
      Poly sa = shifted_single_char(a), sb = shifted_single_char(b);
      Poly v = Poly::var(Coord::TPrime, off.p1);
      return -(sa * sa) - sb * sb +
             Rational(2) * (sa * sb + sa * v + sb * v) + sa * sb * v;
    }
    case Offence::Shared: {
      int s, u, v;
      if (off.p1.first() == off.p2.first()) {
        s = off.p1.first();
        u = off.p1.second();
        v = off.p2.second();
      } else if (off.p1.first() == off.p2.second()) {
        s = off.p1.first();
        u = off.p1.second();
        v = off.p2.first();
      } else if (off.p1.second() == off.p2.first()) {
        s = off.p1.second();
        u = off.p1.first();
        v = off.p2.second();
      } else {
        s = off.p1.second();
        u = off.p1.first();
        v = off.p2.first();
      }
      // t'_{su} t'_{sv} is the swap left side for (x, y, z, w) = (s, v, u, s).
      return pair_swap_rhs(s, v, u, s);
    }
    case Offence::Crossing: {
      int a = off.p1.first(), c = off.p1.second();
      int b = off.p2.first(), d = off.p2.second();
      // t'_{ac} t'_{bd} -> leading term t'_{ab} t'_{cd}.
      return pair_swap_rhs(a, d, c, b);
    }
    case Offence::Nesting: {
      int a = off.p1.first(), d = off.p1.second();
      int b = off.p2.first(), c = off.p2.second();
      // t'_{ad} t'_{bc} -> leading term t'_{ab} t'_{cd}.
      return pair_swap_rhs(a, c, d, b);
    }
  }
  throw std::logic_error("unreachable");
}

using Chooser = std::function<size_t(size_t)>;

class Rewriter {
 public:
  Rewriter(std::map<Monomial, Poly>* cache, const Chooser* choose)
      : cache_(cache), choose_(choose) {}

  Poly reduce_poly(const Poly& p) {
    Poly out(Coord::TPrime);
    for (const auto& [m, c] : p.terms()) out += c * reduce_monomial(m);
    return out;
  }

  Poly reduce_monomial(const Monomial& m) {
    if (cache_) {
      auto it = cache_->find(m);
      if (it != cache_->end()) return it->second;
    }
    Poly result = [&] {
      auto offs = offences(m);
      if (offs.empty()) return Poly::monomial(Coord::TPrime, m, 1);
      size_t pick = 0;
      if (choose_ && offs.size() > 1) pick = (*choose_)(offs.size());
      const Offence& off = offs.at(pick);
      Monomial rest = m.divide(off.p1, off.kind == Offence::Square ? 2 : 1);
      if (off.kind != Offence::Square) rest = rest.divide(off.p2, 1);
      return reduce_poly(replacement(off) * Poly::monomial(Coord::TPrime, rest, 1));
    }();
    if (cache_) cache_->emplace(m, result);
    return result;
  }

 private:
  std::map<Monomial, Poly>* cache_;
  const Chooser* choose_;
};

thread_local std::map<Monomial, Poly> g_nf_cache;

}  // namespace

NormalForm normal_form(const Poly& p) {
  if (p.coord() != Coord::TPrime) throw coord_mismatch();
  return NormalForm(Rewriter(&g_nf_cache, nullptr).reduce_poly(p));
}

Poly normal_form_with_chooser(const Poly& p, const RewriteChooser& choose) {
  if (p.coord() != Coord::TPrime) throw coord_mismatch();
  std::map<Monomial, Poly> local_cache;
  return Rewriter(&local_cache, &choose).reduce_poly(p);
}

bool is_in_ideal(const Poly& p) {
  return normal_form(shift_coordinates(p, Coord::TPrime)).is_zero();
}

bool equal_mod_I(const Poly& p, const Poly& q) {
  return is_in_ideal(shift_coordinates(p, Coord::TPrime) -
                     shift_coordinates(q, Coord::TPrime));
}

std::optional<int> weight(const Poly& p) {
  NormalForm nf = normal_form(shift_coordinates(p, Coord::TPrime));
  if (nf.is_zero()) return std::nullopt;
  return nf.poly().min_degree();
}

NormalForm ring_mul_normalized(const NormalForm& p, const NormalForm& q) {
  return normal_form(p.poly() * q.poly());
}

}  // namespace fricke
