#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace fricke {

// A generator variable of the character ring presentation: either the trace
// variable of a single generator (t_i) or of a product of two distinct
// generators (t_ij with i < j). Pair(i,i) and Pair(j,i) with j > i do not
// exist as variables; callers rewrite those first (swap the indices, or
// expand t_ii through the squared single trace).
class VarId {
 public:
  static VarId single(int i) {
    if (i < 1) throw std::invalid_argument("VarId: single index must be >= 1");
    return VarId(i, 0);
  }
  static VarId pair(int i, int j) {
    if (i < 1 || j <= i)
      throw std::invalid_argument("VarId: pair indices must satisfy 1 <= i < j");
    return VarId(i, j);
  }

  bool is_pair() const { return second_ != 0; }
  bool is_single() const { return second_ == 0; }
  // Single: the index. Pair: the smaller index.
  int first() const { return first_; }
  // Pair only: the larger index.
  int second() const { return second_; }
  int max_index() const { return is_pair() ? second_ : first_; }

  // All singles precede all pairs; singles by index, pairs lex on (i, j).
  friend auto operator<=>(const VarId& a, const VarId& b) {
    if (a.is_pair() != b.is_pair()) return a.is_pair() <=> b.is_pair();
    if (a.first_ != b.first_) return a.first_ <=> b.first_;
    return a.second_ <=> b.second_;
  }
  friend bool operator==(const VarId&, const VarId&) = default;

 private:
  VarId(int f, int s) : first_(f), second_(s) {}
  int first_;
  int second_;  // 0 for singles
};

}  // namespace fricke
