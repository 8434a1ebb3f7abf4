#include "fricke/graded.h"

#include <algorithm>
#include <functional>

#include "fricke/ideal.h"

namespace fricke {

Monomial BasisMonomial::monomial() const {
  Monomial m;
  for (const auto& [p, q] : pairs) m = m.times(VarId::pair(p, q));
  for (int i : singles) m = m.times(VarId::single(i));
  return m;
}

Poly BasisMonomial::poly() const { return Poly::monomial(Coord::TPrime, monomial(), 1); }

std::string BasisMonomial::str() const { return poly().str(); }

namespace {

void enumerate_subsets(int n, int size, int from, std::vector<int>& acc,
                       const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(acc.size()) == size) {
    emit(acc);
    return;
  }
  for (int i = from; i <= n; ++i) {
    acc.push_back(i);
    enumerate_subsets(n, size, i + 1, acc, emit);
    acc.pop_back();
  }
}

void enumerate_multisets(int n, int size, int from, std::vector<int>& acc,
                         const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(acc.size()) == size) {
    emit(acc);
    return;
  }
  for (int i = from; i <= n; ++i) {
    acc.push_back(i);
    enumerate_multisets(n, size, i, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<BasisMonomial> basis(int n, int k) {
  if (n < 1) throw std::invalid_argument("basis: rank must be >= 1");
  if (k < 1) throw std::invalid_argument("basis: degree must be >= 1");
  std::vector<BasisMonomial> out;
  for (int l = 0; 2 * l <= n && l <= k; ++l) {
    std::vector<int> subset;
    enumerate_subsets(n, 2 * l, 1, subset, [&](const std::vector<int>& idx) {
      // The interlacing condition pairs a sorted 2l-subset consecutively.
      std::vector<std::pair<int, int>> pairs;
      for (int t = 0; t < l; ++t) pairs.emplace_back(idx[2 * t], idx[2 * t + 1]);
      std::vector<int> single_acc;
      enumerate_multisets(n, k - l, 1, single_acc, [&](const std::vector<int>& singles) {
        out.push_back({pairs, singles});
      });
    });
  }
  return out;
}

Int dim_gr(int n, int k) {
  if (n < 1) throw std::invalid_argument("dim_gr: rank must be >= 1");
  if (k < 1) throw std::invalid_argument("dim_gr: degree must be >= 1");
  Int total = 0;
  for (int l = 0; l <= k; ++l)
    total += binomial(n, 2 * l) * binomial(n + k - l - 1, k - l);
  return total;
}

weight_precondition_error::weight_precondition_error(std::optional<int> actual_weight, int k)
    : std::invalid_argument(
          "graded_component: element has weight " +
          (actual_weight ? std::to_string(*actual_weight) : std::string("infinity")) +
          " < requested degree " + std::to_string(k)),
      actual(actual_weight),
      required(k) {}

std::vector<Rational> graded_component(const Poly& p, int n, int k) {
  if (k < 1) throw std::invalid_argument("graded_component: degree must be >= 1");
  if (p.max_index() > n)
    throw std::invalid_argument("graded_component: polynomial uses indices beyond the rank");
  NormalForm nf = normal_form(shift_coordinates(p, Coord::TPrime));
  if (!nf.is_zero()) {
    int w = nf.poly().min_degree();
    if (w < k) throw weight_precondition_error(w, k);
  }
  std::vector<Rational> coords;
  auto bs = basis(n, k);
  coords.reserve(bs.size());
  for (const auto& b : bs) coords.push_back(nf.poly().coeff(b.monomial()));
  return coords;
}

size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  // Clear denominators so the elimination stays over the integers.
  std::vector<std::vector<Int>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("exact_rank: ragged matrix");
    Int lcm = 1;
    for (const auto& x : row) {
      Int d = denominator(x);
      lcm = lcm / gcd(lcm, d) * d;
    }
    std::vector<Int> irow;
    irow.reserve(ncols);
    for (const auto& x : row) irow.push_back(numerator(x) * (lcm / denominator(x)));
    m.push_back(std::move(irow));
  }

  // Bareiss fraction-free elimination; prev divides exactly at every step.
  size_t rank = 0;
  Int prev = 1;
  for (size_t col = 0; col < ncols && rank < m.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (size_t r = rank + 1; r < m.size(); ++r) {
      for (size_t c = col + 1; c < ncols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace fricke
