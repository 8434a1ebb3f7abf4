#include "fricke/aut.h"

#include <map>
#include <sstream>

#include "fricke/ideal.h"
#include "fricke/trace.h"

namespace fricke {

Automorphism::Automorphism(int n, std::vector<long long> entries)
    : n_(n), m_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("Automorphism: rank must be >= 1");
  if (m_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("Automorphism: expected " + std::to_string(n * n) +
                                " entries");
  Int d = det();
  if (d != 1 && d != -1)
    throw std::invalid_argument("Automorphism: determinant must be +1 or -1, got " +
                                d.str());
}

Automorphism Automorphism::identity(int n) {
  std::vector<long long> e(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1;
  return Automorphism(n, std::move(e));
}

Automorphism Automorphism::transvection(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("transvection needs distinct indices");
  Automorphism t = identity(n);
  t.m_[static_cast<size_t>(i - 1) * n + (j - 1)] = 1;
  return t;
}

Automorphism Automorphism::permutation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<long long> e(static_cast<size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) {
    int img = perm[i - 1];
    if (img < 1 || img > n) throw std::invalid_argument("permutation image out of range");
    e[static_cast<size_t>(i - 1) * n + (img - 1)] = 1;
  }
  return Automorphism(n, std::move(e));
}

Int Automorphism::det() const {
  // Bareiss elimination over the integers.
  std::vector<std::vector<Int>> a(n_, std::vector<Int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a[i][j] = m_[static_cast<size_t>(i) * n_ + j];
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n_; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n_ - 1][n_ - 1];
}

AbelianWord Automorphism::image_of_generator(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("generator index out of range");
  std::vector<long long> row(m_.begin() + static_cast<size_t>(i - 1) * n_,
                             m_.begin() + static_cast<size_t>(i) * n_);
  return AbelianWord(std::move(row));
}

Automorphism Automorphism::compose(const Automorphism& then) const {
  if (n_ != then.n_) throw std::invalid_argument("Automorphism: rank mismatch");
  std::vector<long long> prod(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      for (int j = 0; j < n_; ++j)
        prod[static_cast<size_t>(i) * n_ + j] +=
            m_[static_cast<size_t>(i) * n_ + k] * then.m_[static_cast<size_t>(k) * n_ + j];
  return Automorphism(n_, std::move(prod));
}

std::string Automorphism::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 1; i <= n_; ++i) {
    out << (i > 1 ? ",[" : "[");
    for (int j = 1; j <= n_; ++j) out << (j > 1 ? "," : "") << entry(i, j);
    out << "]";
  }
  out << "]";
  return out.str();
}

Automorphism iota(int n) {
  std::vector<long long> e(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = -1;
  return Automorphism(n, std::move(e));
}

Poly act_on_generator(const Automorphism& sigma, VarId v) {
  AbelianWord w = sigma.image_of_generator(v.first());
  if (v.is_pair()) w = w * sigma.image_of_generator(v.second());
  return char_abelian_shifted(w);
}

Poly act_on_poly(const Automorphism& sigma, const Poly& p) {
  if (p.coord() == Coord::T)
    return shift_coordinates(act_on_poly(sigma, shift_coordinates(p, Coord::TPrime)),
                             Coord::T);
  std::map<VarId, Poly> images;
  Poly out(Coord::TPrime);
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(Coord::TPrime, c);
    for (const auto& [v, e] : m.exponents()) {
      auto it = images.find(v);
      if (it == images.end()) it = images.emplace(v, act_on_generator(sigma, v)).first;
      for (int k = 0; k < e; ++k) term *= it->second;
    }
    out += term;
  }
  return out;
}

bool in_E_k(const Automorphism& sigma, int k) {
  if (k < 1) throw std::invalid_argument("in_E_k: k must be >= 1");
  const int n = sigma.rank();
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(VarId::single(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) vars.push_back(VarId::pair(i, j));
  for (VarId v : vars) {
    Poly defect = act_on_generator(sigma, v) - Poly::var(Coord::TPrime, v);
    auto w = weight(defect);
    if (w.has_value() && *w < k + 1) return false;
  }
  return true;
}

}  // namespace fricke
