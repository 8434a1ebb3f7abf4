#include "fricke/monomial.h"

#include <stdexcept>

namespace fricke {

Monomial Monomial::var(VarId v, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("monomial exponents must be >= 0");
  if (exp > 0) m.exps_[v] = exp;
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::pair_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_)
    if (v.is_pair()) d += e;
  return d;
}

int Monomial::max_index() const {
  int m = 0;
  for (const auto& [v, e] : exps_)
    if (v.max_index() > m) m = v.max_index();
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [v, e] : other.exps_) {
    int& slot = out.exps_[v];
    slot += e;
  }
  return out;
}

Monomial Monomial::times(VarId v, int exp) const {
  return times(Monomial::var(v, exp));
}

Monomial Monomial::divide(VarId v, int exp) const {
  Monomial out = *this;
  auto it = out.exps_.find(v);
  if (it == out.exps_.end() || it->second < exp)
    throw std::invalid_argument("monomial division underflow");
  it->second -= exp;
  if (it->second == 0) out.exps_.erase(it);
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Parallel walk in increasing VarId order; the first variable where the
  // exponents differ decides, larger exponent first.
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() && ib != b.exps_.end()) {
    if (ia->first != ib->first)
      // The monomial owning the earlier variable has a positive exponent
      // where the other has zero, so it comes first.
      return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia, ++ib;
  }
  return ia != a.exps_.end();
}

}  // namespace fricke
