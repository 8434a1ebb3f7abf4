#include "fricke/oracle.h"

#include <stdexcept>

namespace fricke {

namespace {

std::vector<int> unit_exps(int n, int i, int value) {
  std::vector<int> e(n, 0);
  e[i - 1] = value;
  return e;
}

LaurentPoly laurent_var(VarId v, int n, bool shifted) {
  // t_i -> l_i + l_i^{-1}; t_ij -> l_i l_j + (l_i l_j)^{-1}; t' lowers by 2.
  LaurentPoly out(n);
  std::vector<int> e(n, 0);
  e[v.first() - 1] += 1;
  if (v.is_pair()) e[v.second() - 1] += 1;
  out += LaurentPoly::term(e, 1);
  for (auto& x : e) x = -x;
  out += LaurentPoly::term(e, 1);
  if (shifted) out += LaurentPoly::constant(n, -2);
  return out;
}

}  // namespace

LaurentPoly laurent_image(const Poly& p, int n) {
  if (p.max_index() > n)
    throw std::invalid_argument("laurent_image: polynomial uses indices beyond the rank");
  const bool shifted = p.coord() == Coord::TPrime;
  std::map<VarId, LaurentPoly> var_images;
  LaurentPoly out(n);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(n, c);
    for (const auto& [v, e] : m.exponents()) {
      auto it = var_images.find(v);
      if (it == var_images.end())
        it = var_images.emplace(v, laurent_var(v, n, shifted)).first;
      for (int k = 0; k < e; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

namespace {

TruncatedSeries series_var(VarId v, int n, int order, bool shifted) {
  // lambda_i = 1 - s_i. For a single: (1-s_i) + 1/(1-s_i);
  // for a pair: (1-s_i)(1-s_j) + 1/((1-s_i)(1-s_j)).
  TruncatedSeries one = TruncatedSeries::constant(n, order, 1);
  TruncatedSeries direct = one - TruncatedSeries::term(n, order, unit_exps(n, v.first(), 1), 1);
  TruncatedSeries inverse = TruncatedSeries::geometric(n, order, v.first());
  if (v.is_pair()) {
    direct *= one - TruncatedSeries::term(n, order, unit_exps(n, v.second(), 1), 1);
    inverse *= TruncatedSeries::geometric(n, order, v.second());
  }
  TruncatedSeries out = direct + inverse;
  if (shifted) out -= TruncatedSeries::constant(n, order, 2);
  return out;
}

}  // namespace

TruncatedSeries series_image(const Poly& p, int n, int order) {
  if (p.max_index() > n)
    throw std::invalid_argument("series_image: polynomial uses indices beyond the rank");
  const bool shifted = p.coord() == Coord::TPrime;
  std::map<VarId, TruncatedSeries> var_images;
  TruncatedSeries out(n, order);
  for (const auto& [m, c] : p.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(n, order, c);
    for (const auto& [v, e] : m.exponents()) {
      auto it = var_images.find(v);
      if (it == var_images.end())
        it = var_images.emplace(v, series_var(v, n, order, shifted)).first;
      for (int k = 0; k < e; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

TruncatedSeries expand_at_one_minus_s(const LaurentPoly& lp, int order) {
  const int n = lp.nvars();
  TruncatedSeries out(n, order);
  TruncatedSeries one = TruncatedSeries::constant(n, order, 1);
  for (const auto& [exps, c] : lp.terms()) {
    TruncatedSeries term = TruncatedSeries::constant(n, order, c);
    for (int i = 0; i < n; ++i) {
      if (exps[i] == 0) continue;
      TruncatedSeries base =
          exps[i] > 0 ? one - TruncatedSeries::term(n, order, unit_exps(n, i + 1, 1), 1)
                      : TruncatedSeries::geometric(n, order, i + 1);
      int count = exps[i] > 0 ? exps[i] : -exps[i];
      for (int k = 0; k < count; ++k) term *= base;
    }
    out += term;
  }
  return out;
}

Rational eval_word_trace(const AbelianWord& w, const RepAssignment& rep) {
  if (rep.rank() != w.rank())
    throw std::invalid_argument("eval_word_trace: rank mismatch");
  if (!rep.commuting_required())
    throw std::invalid_argument("eval_word_trace: abelian word needs a commuting assignment");
  Matrix2 prod = Matrix2::identity();
  for (int i = 1; i <= w.rank(); ++i)
    prod = prod * rep.matrix(i).pow(w.exponent(i));
  return prod.trace();
}

Rational eval_word_trace(const FreeWord& w, const RepAssignment& rep) {
  if (rep.rank() != w.rank())
    throw std::invalid_argument("eval_word_trace: rank mismatch");
  Matrix2 prod = Matrix2::identity();
  for (const auto& l : w.letters()) {
    const Matrix2& m = rep.matrix(l.index);
    prod = prod * (l.sign > 0 ? m : m.inverse());
  }
  return prod.trace();
}

long long RationalSampler::below(long long bound) {
  if (bound <= 0) throw std::invalid_argument("RationalSampler::below: empty range");
  // Rejection-free modulo reduction; the tiny bias is irrelevant for test
  // point generation and keeps the stream implementation-independent.
  return static_cast<long long>(eng_() % static_cast<unsigned long long>(bound));
}

long long RationalSampler::range(long long lo, long long hi) {
  return lo + below(hi - lo + 1);
}

Rational RationalSampler::bounded(bool nonzero) {
  while (true) {
    Rational r(range(-4, 4), range(1, 3));
    if (!nonzero || r != 0) return r;
  }
}

Matrix2 RationalSampler::sl2() {
  Rational a = bounded(true);
  Rational b = bounded(false);
  Rational c = bounded(false);
  Rational d = (Rational(1) + b * c) / a;
  return Matrix2(a, b, c, d);
}

Poly RationalSampler::poly(Coord coord, int n, int max_degree, int max_terms) {
  if (n < 1) throw std::invalid_argument("RationalSampler::poly: rank must be >= 1");
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(VarId::single(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) vars.push_back(VarId::pair(i, j));
  Poly out(coord);
  long long terms = range(1, max_terms);
  for (long long t = 0; t < terms; ++t) {
    Monomial m;
    long long deg = range(0, max_degree);
    for (long long d = 0; d < deg; ++d)
      m = m.times(vars[static_cast<size_t>(below(static_cast<long long>(vars.size())))]);
    out.add_term(m, bounded(true));
  }
  return out;
}

std::vector<Matrix2> sample_sl2(std::uint64_t seed, int count) {
  RationalSampler sampler(seed);
  std::vector<Matrix2> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sampler.sl2());
  return out;
}

RepAssignment sample_commuting_family(std::uint64_t seed, int n, CommutingKind kind) {
  RationalSampler sampler(seed);
  std::vector<Matrix2> mats;
  mats.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (kind == CommutingKind::Diagonal) {
      mats.push_back(Matrix2::diagonal(sampler.bounded(true)));
    } else {
      // +/- upper unitriangular; such matrices all commute up to the sign,
      // which is central.
      Rational sign(sampler.below(2) == 0 ? 1 : -1);
      mats.push_back(Matrix2(sign, sign * sampler.bounded(false), 0, sign));
    }
  }
  return RepAssignment(std::move(mats), true);
}

RepAssignment diagonal_rep(const std::vector<Rational>& lambdas) {
  std::vector<Matrix2> mats;
  mats.reserve(lambdas.size());
  for (const auto& l : lambdas) mats.push_back(Matrix2::diagonal(l));
  return RepAssignment(std::move(mats), true);
}

TraceIdentity trace_identity_from_name(std::string_view name) {
  if (name == "inverse-trace") return TraceIdentity::InverseTrace;
  if (name == "cyclic-trace") return TraceIdentity::CyclicTrace;
  if (name == "product-inverse-sum") return TraceIdentity::ProductInverseSum;
  if (name == "triple-swap") return TraceIdentity::TripleSwap;
  if (name == "commutator-trace") return TraceIdentity::CommutatorTrace;
  if (name == "quad-expansion") return TraceIdentity::QuadExpansion;
  throw std::invalid_argument("unknown trace identity '" + std::string(name) + "'");
}

namespace {

bool vogt_holds(TraceIdentity id, RationalSampler& sampler) {
  auto tr = [](const Matrix2& m) { return m.trace(); };
  switch (id) {
    case TraceIdentity::InverseTrace: {
      Matrix2 x = sampler.sl2();
      return tr(x.inverse()) == tr(x);
    }
    case TraceIdentity::CyclicTrace: {
      Matrix2 x = sampler.sl2(), y = sampler.sl2();
      return tr(x * y) == tr(y * x);
    }
    case TraceIdentity::ProductInverseSum: {
      Matrix2 x = sampler.sl2(), y = sampler.sl2();
      return tr(x * y) + tr(x * y.inverse()) == tr(x) * tr(y);
    }
    case TraceIdentity::TripleSwap: {
      Matrix2 x = sampler.sl2(), y = sampler.sl2(), z = sampler.sl2();
      return tr(x * y * z) + tr(y * x * z) ==
             tr(x) * tr(y * z) + tr(y) * tr(x * z) + tr(z) * tr(x * y) -
                 tr(x) * tr(y) * tr(z);
    }
    case TraceIdentity::CommutatorTrace: {
      Matrix2 x = sampler.sl2(), y = sampler.sl2();
      Matrix2 comm = x * y * x.inverse() * y.inverse();
      Rational txy = tr(x * y);
      return tr(comm) ==
             tr(x) * tr(x) + tr(y) * tr(y) + txy * txy - tr(x) * tr(y) * txy - 2;
    }
    case TraceIdentity::QuadExpansion: {
      Matrix2 x = sampler.sl2(), y = sampler.sl2(), z = sampler.sl2(), w = sampler.sl2();
      Rational lhs = 2 * tr(x * y * z * w);
      Rational rhs = tr(x) * tr(y * z * w) + tr(y) * tr(z * w * x) +
                     tr(z) * tr(w * x * y) + tr(w) * tr(x * y * z) +
                     tr(x * y) * tr(z * w) - tr(x * z) * tr(y * w) +
                     tr(x * w) * tr(y * z) - tr(x) * tr(y) * tr(z * w) -
                     tr(y) * tr(z) * tr(x * w) - tr(x) * tr(w) * tr(y * z) -
                     tr(z) * tr(w) * tr(x * y) + tr(x) * tr(y) * tr(z) * tr(w);
      return lhs == rhs;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool verify_vogt(TraceIdentity id, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("verify_vogt: trials must be >= 1");
  RationalSampler sampler(seed);
  for (int t = 0; t < trials; ++t)
    if (!vogt_holds(id, sampler)) return false;
  return true;
}

bool verify_f3_kernel(std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("verify_f3_kernel: trials must be >= 1");
  RationalSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    Matrix2 x = sampler.sl2(), y = sampler.sl2(), z = sampler.sl2();
    Rational ta = x.trace(), tb = y.trace(), tc = z.trace();
    Rational tab = (x * y).trace(), tac = (x * z).trace(), tbc = (y * z).trace();
    Rational p = tab * tc + tac * tb + tbc * ta - ta * tb * tc;
    Rational q = ta * ta + tb * tb + tc * tc + tab * tab + tac * tac + tbc * tbc -
                 ta * tb * tab - ta * tc * tac - tb * tc * tbc + tab * tbc * tac - 4;
    Rational t123 = (x * y * z).trace();
    if (t123 * t123 - p * t123 + q != 0) return false;
  }
  return true;
}

}  // namespace fricke
