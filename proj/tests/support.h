#pragma once

#include <map>
#include <vector>

#include "fricke/aut.h"
#include "fricke/graded.h"
#include "fricke/oracle.h"

namespace fricke::testing {

// Applies an index permutation (1-based images) to every variable.
inline Poly permute_variables(const Poly& p, const std::vector<int>& perm) {
  Poly out(p.coord());
  for (const auto& [m, c] : p.terms()) {
    Monomial pm;
    for (const auto& [v, e] : m.exponents()) {
      if (v.is_single()) {
        pm = pm.times(VarId::single(perm[v.first() - 1]), e);
      } else {
        int a = perm[v.first() - 1], b = perm[v.second() - 1];
        if (a > b) std::swap(a, b);
        pm = pm.times(VarId::pair(a, b), e);
      }
    }
    out.add_term(pm, c);
  }
  return out;
}

// Row matrix of the degree-2k series coefficients of the basis of gr^k(J).
// Full row rank is the linear-independence certificate.
inline std::vector<std::vector<Rational>> basis_series_matrix(int n, int k) {
  auto bs = basis(n, k);
  std::vector<TruncatedSeries> images;
  std::map<std::vector<int>, size_t> columns;
  images.reserve(bs.size());
  for (const auto& b : bs) {
    TruncatedSeries s = series_image(b.poly(), n, 2 * k).component(2 * k);
    for (const auto& [e, c] : s.terms()) columns.emplace(e, columns.size());
    images.push_back(std::move(s));
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(images.size());
  for (const auto& s : images) {
    std::vector<Rational> row(columns.size(), 0);
    for (const auto& [e, c] : s.terms()) row[columns.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

// Random element of GL(n, Z) as a short product of elementary moves, so the
// entries stay small and the determinant is +-1 by construction.
inline Automorphism random_unimodular(RationalSampler& sampler, int n, int ops = 5) {
  Automorphism sigma = Automorphism::identity(n);
  for (int t = 0; t < ops; ++t) {
    switch (sampler.below(3)) {
      case 0: {  // transvection, possibly with a -1 off-diagonal entry
        int i = static_cast<int>(sampler.range(1, n));
        int j = static_cast<int>(sampler.range(1, n));
        if (i == j) break;
        std::vector<long long> e(static_cast<size_t>(n) * n, 0);
        for (int d = 0; d < n; ++d) e[static_cast<size_t>(d) * n + d] = 1;
        e[static_cast<size_t>(i - 1) * n + (j - 1)] = sampler.below(2) ? 1 : -1;
        sigma = sigma.compose(Automorphism(n, std::move(e)));
        break;
      }
      case 1: {  // swap two generators
        int i = static_cast<int>(sampler.range(1, n));
        int j = static_cast<int>(sampler.range(1, n));
        if (i == j) break;
        std::vector<int> perm(n);
        for (int d = 0; d < n; ++d) perm[d] = d + 1;
        std::swap(perm[i - 1], perm[j - 1]);
        sigma = sigma.compose(Automorphism::permutation(perm));
        break;
      }
      default: {  // invert one generator
        int i = static_cast<int>(sampler.range(1, n));
        std::vector<long long> e(static_cast<size_t>(n) * n, 0);
        for (int d = 0; d < n; ++d)
          e[static_cast<size_t>(d) * n + d] = d == i - 1 ? -1 : 1;
        sigma = sigma.compose(Automorphism(n, std::move(e)));
        break;
      }
    }
  }
  return sigma;
}

inline bool is_plus_minus_identity(const Automorphism& sigma) {
  return sigma == Automorphism::identity(sigma.rank()) || sigma == iota(sigma.rank());
}

}  // namespace fricke::testing
