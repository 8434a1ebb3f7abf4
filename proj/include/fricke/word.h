#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fricke {

// Element of the free abelian group of rank n, stored as its exponent
// vector: entry i-1 is the exponent of the generator x_i.
class AbelianWord {
 public:
  explicit AbelianWord(std::vector<long long> exps) : exps_(std::move(exps)) {}
  static AbelianWord identity(int n) { return AbelianWord(std::vector<long long>(n, 0)); }
  static AbelianWord generator(int n, int i);

  int rank() const { return static_cast<int>(exps_.size()); }
  long long exponent(int i) const { return exps_.at(i - 1); }  // 1-based
  const std::vector<long long>& exponents() const { return exps_; }
  bool is_identity() const;

  AbelianWord operator*(const AbelianWord& other) const;
  AbelianWord inverse() const;
  AbelianWord power(long long e) const;

  friend bool operator==(const AbelianWord&, const AbelianWord&) = default;
  friend bool operator<(const AbelianWord& a, const AbelianWord& b) { return a.exps_ < b.exps_; }

  std::string str() const;

 private:
  std::vector<long long> exps_;
};

// Unreduced word in the free group F_n: a sequence of signed letters.
// Only the matrix-evaluation oracle consumes these.
struct FreeLetter {
  int index;  // 1..n
  int sign;   // +1 or -1
};

class FreeWord {
 public:
  FreeWord(int rank, std::vector<FreeLetter> letters);
  int rank() const { return rank_; }
  const std::vector<FreeLetter>& letters() const { return letters_; }

 private:
  int rank_;
  std::vector<FreeLetter> letters_;
};

// Parses either `x1^3*x2^-2` (the `*` optional, whitespace ignored) or a
// bracketed exponent vector `[3,-2,0]`. When n == 0 the rank is inferred
// (vector length, or the largest generator index). Errors report the
// offending token and its position.
AbelianWord parse_word(std::string_view text, int n = 0);

}  // namespace fricke
