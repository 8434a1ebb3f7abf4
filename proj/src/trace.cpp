#include "fricke/trace.h"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace fricke {

namespace {

using Key = std::vector<long long>;

// Shared across calls; the reduction is pure, so cached entries never
// change. thread_local keeps concurrent use lock-free.
thread_local std::map<Key, Poly> g_char_cache;

Poly char_rec(const Key& w);

Poly char_step(const Key& w) {
  const int n = static_cast<int>(w.size());

  // Pick the lowest-index generator whose |exponent| is maximal among the
  // entries outside {0, 1}.
  int target = -1;
  long long best = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i] == 0 || w[i] == 1) continue;
    long long mag = std::llabs(w[i]);
    if (mag > best) {
      best = mag;
      target = i;
    }
  }

  if (target >= 0) {
    Poly ti = Poly::var(Coord::T, VarId::single(target + 1));
    Key one = w, two = w;
    if (w[target] >= 2) {
      one[target] -= 1;
      two[target] -= 2;
    } else {
      one[target] += 1;
      two[target] += 2;
    }
    return ti * char_rec(one) - char_rec(two);
  }

  // All exponents in {0, 1}.
  std::vector<int> support;
  for (int i = 0; i < n; ++i)
    if (w[i] == 1) support.push_back(i + 1);

  if (support.empty()) return Poly::constant(Coord::T, 2);
  if (support.size() == 1) return Poly::var(Coord::T, VarId::single(support[0]));
  if (support.size() == 2)
    return Poly::var(Coord::T, VarId::pair(support[0], support[1]));

  // Split off the two lowest generators x, y against the tail z:
  // 2 tr xyz = (tr x)(tr yz) + (tr y)(tr xz) + (tr z)(tr xy) - (tr x)(tr y)(tr z).
  int x = support[0], y = support[1];
  Poly tx = Poly::var(Coord::T, VarId::single(x));
  Poly ty = Poly::var(Coord::T, VarId::single(y));
  Poly txy = Poly::var(Coord::T, VarId::pair(x, y));
  Key wx = w, wy = w, tail = w;
  wx[x - 1] = 0;
  wy[y - 1] = 0;
  tail[x - 1] = 0;
  tail[y - 1] = 0;
  Poly tail_char = char_rec(tail);
  Poly result = tx * char_rec(wx) + ty * char_rec(wy) + txy * tail_char - tx * ty * tail_char;
  result /= Rational(2);
  return result;
}

Poly char_rec(const Key& w) {
  auto it = g_char_cache.find(w);
  if (it != g_char_cache.end()) return it->second;
  Poly result = char_step(w);
  g_char_cache.emplace(w, result);
  return result;
}

}  // namespace

Poly char_abelian(const AbelianWord& w) { return char_rec(w.exponents()); }

Poly char_abelian_shifted(const AbelianWord& w) {
  Poly shifted = shift_coordinates(char_abelian(w), Coord::TPrime);
  return shifted - Poly::constant(Coord::TPrime, 2);
}

Poly shifted_single_char(int i) {
  return Poly::var(Coord::TPrime, VarId::single(i));
}

Poly shifted_pair_char(int i, int j) {
  if (i == j) {
    // tr'(x_i^2) = (t'_i)^2 + 4 t'_i
    Poly ti = Poly::var(Coord::TPrime, VarId::single(i));
    return ti * ti + Rational(4) * ti;
  }
  if (i > j) std::swap(i, j);
  return Poly::var(Coord::TPrime, VarId::pair(i, j));
}

}  // namespace fricke
