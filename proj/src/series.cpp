#include "fricke/series.h"

#include <numeric>
#include <sstream>

namespace fricke {

namespace {
int total(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

TruncatedSeries::TruncatedSeries(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 0) throw std::invalid_argument("TruncatedSeries: negative variable count");
  if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
}

TruncatedSeries TruncatedSeries::constant(int nvars, int order, const Rational& r) {
  TruncatedSeries s(nvars, order);
  if (r != 0) s.terms_[std::vector<int>(nvars, 0)] = r;
  return s;
}

TruncatedSeries TruncatedSeries::term(int nvars, int order, std::vector<int> exps,
                                      const Rational& coef) {
  TruncatedSeries s(nvars, order);
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("TruncatedSeries: negative exponent");
  if (coef != 0 && total(exps) <= order) s.terms_[std::move(exps)] = coef;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(int nvars, int order, int var_index) {
  TruncatedSeries s(nvars, order);
  for (int m = 0; m <= order; ++m) {
    std::vector<int> e(nvars, 0);
    e[var_index - 1] = m;
    s.terms_[std::move(e)] = 1;
  }
  return s;
}

int TruncatedSeries::min_degree() const {
  if (terms_.empty()) return -1;
  int d = order_ + 1;
  for (const auto& [e, c] : terms_)
    if (total(e) < d) d = total(e);
  return d;
}

TruncatedSeries TruncatedSeries::component(int d) const {
  TruncatedSeries out(nvars_, order_);
  for (const auto& [e, c] : terms_)
    if (total(e) == d) out.terms_[e] = c;
  return out;
}

void TruncatedSeries::check_compat(const TruncatedSeries& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("TruncatedSeries: variable count mismatch");
  if (order_ != other.order_)
    throw std::invalid_argument("TruncatedSeries: truncation order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_compat(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_compat(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compat(b);
  TruncatedSeries out(a.nvars_, a.order_);
  for (const auto& [ea, ca] : a.terms_) {
    int da = total(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total(eb) > a.order_) continue;
      std::vector<int> e(a.nvars_);
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
  *this = *this * other;
  return *this;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) out << "*s" << (i + 1) << "^" << e[i];
  }
  return out.str();
}

}  // namespace fricke
