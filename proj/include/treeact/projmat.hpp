#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace treeact {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// A 2x2 nonsingular matrix over Q up to a nonzero scalar, stored as its
/// unique canonical representative: integer entries with gcd 1, first
/// nonzero entry (in the order m11, m12, m21, m22) positive.
///
/// Canonicality makes scalar-class equality a plain field comparison and
/// the struct a usable hash key. Construct through the factories; they
/// canonicalize. All operations are pure and values are immutable in
/// practice, so matrices can be shared freely across threads.
struct ProjectiveMatrix {
  BigInt m11, m12, m21, m22;

  ProjectiveMatrix() : m11(1), m12(0), m21(0), m22(1) {}

  static ProjectiveMatrix identity() { return ProjectiveMatrix(); }

  /// Canonicalize an integer matrix. Throws singular_matrix_error on det 0.
  static ProjectiveMatrix from_integers(const BigInt& a, const BigInt& b,
                                        const BigInt& c, const BigInt& d);

  /// Canonicalize a rational matrix (clears denominators first).
  static ProjectiveMatrix from_rationals(const BigRational& a, const BigRational& b,
                                         const BigRational& c, const BigRational& d);

  bool operator==(const ProjectiveMatrix& o) const {
    return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
  }
  bool operator!=(const ProjectiveMatrix& o) const { return !(*this == o); }

  bool is_identity() const { return m11 == 1 && m12 == 0 && m21 == 0 && m22 == 1; }

  /// True iff the entries satisfy the canonical-form invariants.
  bool is_canonical() const;

  std::string to_string() const;  // "[[a, b], [c, d]]"
};

ProjectiveMatrix mul(const ProjectiveMatrix& x, const ProjectiveMatrix& y);

/// Projective inverse via the adjugate; stays in integer arithmetic.
ProjectiveMatrix inverse(const ProjectiveMatrix& x);

inline ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
  return mul(x, y);
}

/// Determinant of the canonical representative. Representative-level: only
/// tr^2/det and det-sign predicates are scalar-class invariants.
BigInt det(const ProjectiveMatrix& x);
BigInt trace(const ProjectiveMatrix& x);

/// Largest e with p^e | n. Throws undefined_valuation_error on n = 0.
unsigned long valuation(const BigInt& n, unsigned long p);

std::size_t hash_bigint(const BigInt& z);

struct ProjectiveMatrixHash {
  std::size_t operator()(const ProjectiveMatrix& m) const;
};

}  // namespace treeact
