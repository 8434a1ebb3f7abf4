#include "fricke/word.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fricke {

AbelianWord AbelianWord::generator(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
  std::vector<long long> e(n, 0);
  e[i - 1] = 1;
  return AbelianWord(std::move(e));
}

bool AbelianWord::is_identity() const {
  for (long long e : exps_)
    if (e != 0) return false;
  return true;
}

AbelianWord AbelianWord::operator*(const AbelianWord& other) const {
  if (exps_.size() != other.exps_.size())
    throw std::invalid_argument("word rank mismatch");
  std::vector<long long> e(exps_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return AbelianWord(std::move(e));
}

AbelianWord AbelianWord::inverse() const {
  std::vector<long long> e(exps_);
  for (auto& x : e) x = -x;
  return AbelianWord(std::move(e));
}

AbelianWord AbelianWord::power(long long k) const {
  std::vector<long long> e(exps_);
  for (auto& x : e) x *= k;
  return AbelianWord(std::move(e));
}

std::string AbelianWord::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (i) out << ",";
    out << exps_[i];
  }
  out << "]";
  return out.str();
}

FreeWord::FreeWord(int rank, std::vector<FreeLetter> letters)
    : rank_(rank), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > rank_)
      throw std::invalid_argument("free word letter index out of range");
    if (l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("free word letter sign must be +1 or -1");
  }
}

namespace {

[[noreturn]] void fail_at(std::string_view text, size_t pos, const std::string& what) {
  std::ostringstream out;
  out << "word parse error at position " << pos << " near '"
      << std::string(text.substr(pos, std::min<size_t>(8, text.size() - pos)))
      << "': " << what;
  throw std::invalid_argument(out.str());
}

long long parse_int_at(std::string_view text, size_t& pos, const char* what) {
  size_t start = pos;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    fail_at(text, start, std::string("expected ") + what);
  long long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000'000) fail_at(text, start, "integer too large");
    ++pos;
  }
  return neg ? -value : value;
}

AbelianWord parse_bracketed(std::string_view text, int n) {
  size_t pos = text.find('[') + 1;
  std::vector<long long> exps;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == ']' && exps.empty()) {
      ++pos;
      break;
    }
    exps.push_back(parse_int_at(text, pos, "integer exponent"));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) fail_at(text, pos, "unterminated exponent vector");
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    fail_at(text, pos, "expected ',' or ']'");
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) fail_at(text, pos, "trailing input after ']'");
  if (n != 0 && static_cast<int>(exps.size()) != n)
    throw std::invalid_argument("exponent vector length " + std::to_string(exps.size()) +
                                " does not match rank " + std::to_string(n));
  return AbelianWord(std::move(exps));
}

AbelianWord parse_letters(std::string_view text, int n) {
  std::vector<std::pair<int, long long>> factors;
  int max_index = 0;
  size_t pos = 0;
  bool expect_factor = true;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '*') {
      if (expect_factor) fail_at(text, pos, "unexpected '*'");
      expect_factor = true;
      ++pos;
      continue;
    }
    if (c != 'x' && c != 'X') fail_at(text, pos, "expected generator 'xN'");
    ++pos;
    long long index = parse_int_at(text, pos, "generator index");
    if (index < 1) fail_at(text, pos, "generator index must be >= 1");
    long long exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_int_at(text, pos, "exponent");
    }
    factors.emplace_back(static_cast<int>(index), exp);
    max_index = std::max<int>(max_index, static_cast<int>(index));
    expect_factor = false;
  }
  if (factors.empty()) fail_at(text, 0, "empty word (use [] or [0,...])");
  if (expect_factor) fail_at(text, text.size() - 1, "dangling '*'");
  int rank = n != 0 ? n : max_index;
  if (max_index > rank)
    throw std::invalid_argument("generator x" + std::to_string(max_index) +
                                " exceeds rank " + std::to_string(rank));
  std::vector<long long> exps(rank, 0);
  for (const auto& [idx, e] : factors) exps[idx - 1] += e;
  return AbelianWord(std::move(exps));
}

}  // namespace

AbelianWord parse_word(std::string_view text, int n) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw std::invalid_argument("empty word text");
  if (text[first] == '[') return parse_bracketed(text.substr(first), n);
  return parse_letters(text.substr(first), n);
}

}  // namespace fricke
