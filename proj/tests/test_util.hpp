#pragma once

#include <random>

#include "treeact/projmat.hpp"
#include "treeact/rep_family.hpp"
#include "treeact/words.hpp"

namespace treeact::test {

inline Word random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  Word w(len(rng));
  for (auto& l : w) l = static_cast<Letter>(letter(rng));
  return w;
}

/// Uniformly random freely reduced word of exactly the given length.
inline Word random_reduced_word(std::mt19937& rng, std::size_t length) {
  std::uniform_int_distribution<int> first(0, 3), next(0, 2);
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (w.empty()) {
      w.push_back(static_cast<Letter>(first(rng)));
    } else {
      // pick among the three letters that do not cancel the previous one
      int k = next(rng);
      if (k >= static_cast<int>(static_cast<unsigned>(inverse(w.back())))) ++k;
      w.push_back(static_cast<Letter>(k));
    }
  }
  return w;
}

inline BigRational random_t(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-60, 60), den(1, 12);
  for (;;) {
    BigRational t(num(rng), den(rng));
    t.canonicalize();
    if (t != 0 && t != 1 && t != -1) return t;
  }
}

inline ProjectiveMatrix random_matrix(std::mt19937& rng, int bound = 9) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  for (;;) {
    const int a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c != 0) return ProjectiveMatrix::from_integers(a, b, c, d);
  }
}

/// Random element of PGL2(Z[1/6]): canonical matrix whose determinant is
/// (up to sign) a product of powers of 2 and 3. max_det_abs = 1 restricts
/// to the integral subgroup PGL2(Z).
inline ProjectiveMatrix random_smooth_matrix(std::mt19937& rng, long max_det_abs = 72) {
  for (;;) {
    const ProjectiveMatrix m = random_matrix(rng, 6);
    BigInt d = abs(det(m)), r;
    if (d > max_det_abs) continue;
    mpz_remove(r.get_mpz_t(), d.get_mpz_t(), BigInt(2).get_mpz_t());
    mpz_remove(d.get_mpz_t(), r.get_mpz_t(), BigInt(3).get_mpz_t());
    if (d == 1) return m;
  }
}

}  // namespace treeact::test
