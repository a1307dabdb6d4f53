#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace treeact {

/// Generator letters of the rank-2 free group, ordered a < A < b < B.
/// The numeric order doubles as the lexicographic order used for
/// deterministic search enumeration; inversion is xor with 1.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

inline Letter inverse(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1u);
}

inline char to_char(Letter l) { return "aAbB"[static_cast<std::uint8_t>(l)]; }

using Word = std::vector<Letter>;

enum class WordStyle { flat, exponent };

/// Parse the public word grammar: flat letters a/b (generators) and A/B
/// (inverses), optionally with exponents a^k, b^k (k a nonzero signed
/// decimal integer; A^k and B^k are accepted too). Whitespace is ignored.
/// No implicit reduction. Throws parse_error with a 0-based position.
Word parse_word(const std::string& text);

std::string format_word(const Word& w, WordStyle style = WordStyle::flat);

/// Unique freely reduced word in the same free-group class; idempotent.
Word free_reduce(const Word& w);

bool is_reduced(const Word& w);

/// Reversed sequence of letter inverses.
Word invert_word(const Word& w);

Word concat(const Word& u, const Word& v);

/// Lexicographic comparison of flat words in the letter order a < A < b < B
/// (not byte order). Same-length inputs only need the lex part; shortlex
/// compares length first.
bool flat_lex_less(const std::string& x, const std::string& y);
bool flat_shortlex_less(const std::string& x, const std::string& y);

/// The 82-letter witness word, embedded as two independently transcribed
/// halves that are cross-checked in the unit tests.
const Word& certificate_word();
const std::string& certificate_word_flat();

}  // namespace treeact
