#include "treeact/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "treeact/errors.hpp"

namespace treeact {

namespace {

// Keeps a hostile "a^999999999" from allocating gigabytes.
constexpr long kMaxExponent = 1 << 24;

int letter_rank(char c) {
  switch (c) {
    case 'a': return 0;
    case 'A': return 1;
    case 'b': return 2;
    case 'B': return 3;
    default: return -1;
  }
}

}  // namespace

Word parse_word(const std::string& text) {
  Word out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < n) {
    const int rank = letter_rank(text[i]);
    if (rank < 0)
      throw parse_error(std::string("unexpected character '") + text[i] + "'", i);
    Letter l = static_cast<Letter>(rank);
    ++i;
    skip_ws();
    long k = 1;
    if (i < n && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      skip_ws();
      std::size_t start = i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits_begin = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits_begin) throw parse_error("malformed exponent", caret);
      const std::string num = text.substr(start, i - start);
      errno = 0;
      k = std::strtol(num.c_str(), nullptr, 10);
      if (errno != 0 || k > kMaxExponent || k < -kMaxExponent)
        throw parse_error("exponent out of range", start);
      if (k == 0) throw parse_error("zero exponent", start);
    }
    if (k < 0) {
      l = inverse(l);
      k = -k;
    }
    out.insert(out.end(), static_cast<std::size_t>(k), l);
    skip_ws();
  }
  return out;
}

std::string format_word(const Word& w, WordStyle style) {
  std::string out;
  if (style == WordStyle::flat) {
    out.reserve(w.size());
    for (Letter l : w) out.push_back(to_char(l));
    return out;
  }
  // exponent style: collapse maximal runs, inverses as negative exponents
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::size_t run = j - i;
    const bool inv = static_cast<std::uint8_t>(w[i]) & 1u;
    const char base = inv ? to_char(inverse(w[i])) : to_char(w[i]);
    out.push_back(base);
    if (inv)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool flat_lex_less(const std::string& x, const std::string& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int rx = letter_rank(x[i]), ry = letter_rank(y[i]);
    if (rx != ry) return rx < ry;
  }
  return x.size() < y.size();
}

bool flat_shortlex_less(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return flat_lex_less(x, y);
}

namespace {
// Two displayed lines of the length-82 witness, transcribed separately.
const char* const kWitnessHalf1 = "aabAABabaaBABaabAbaaBABabaBabAbaaBaaabAAB";
const char* const kWitnessHalf2 = "aBAAbbaBAAbABaBAAbaBaabAbaBabAbaaBaaabAAB";
}  // namespace

const std::string& certificate_word_flat() {
  static const std::string flat = std::string(kWitnessHalf1) + kWitnessHalf2;
  return flat;
}

const Word& certificate_word() {
  static const Word w = parse_word(certificate_word_flat());
  return w;
}

}  // namespace treeact
