#pragma once

#include <string>
#include <vector>

#include "treeact/projmat.hpp"
#include "treeact/rep_family.hpp"
#include "treeact/words.hpp"

namespace treeact {

/// Order of a projective matrix over Q: finite orders are exactly
/// 1, 2, 3, 4, 6, everything else has infinite order.
struct OrderClass {
  bool finite = false;
  unsigned n = 0;  // meaningful only when finite

  static OrderClass finite_order(unsigned n) { return {true, n}; }
  static OrderClass infinite() { return {false, 0}; }

  bool operator==(const OrderClass& o) const {
    return finite == o.finite && (!finite || n == o.n);
  }
  bool operator!=(const OrderClass& o) const { return !(*this == o); }

  std::string to_string() const;  // "finite(2)" / "infinite"
};

/// O(1) arithmetic classification by the scalar-class invariant tr^2/det:
/// identity -> 1; nonscalar trace 0 -> 2 (Cayley-Hamilton); tr^2 equal to
/// det, 2 det, 3 det -> 3, 4, 6; nonscalar tr^2 = 4 det is parabolic and
/// every remaining case is hyperbolic or an infinite-order elliptic.
OrderClass classify_order(const ProjectiveMatrix& g);

struct WitnessRecord {
  std::string word;  // flat form
  ProjectiveMatrix matrix;
  BigInt det;
  BigInt trace;
  OrderClass order;
  unsigned long displacement2 = 0;
  unsigned long displacement3 = 0;

  /// Improperness witness: a nontrivial infinite-order element fixing the
  /// base vertex pair, i.e. |det| = 1 with infinite order.
  bool is_witness() const;
};

WitnessRecord make_record(std::string flat_word, const ProjectiveMatrix& m);
WitnessRecord build_record(const Word& w, const RepFamily& fam = long_reid_family());

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
  std::string first_failure;  // empty when all pass
  std::string conclusion;

  std::string text() const;
};

/// The canonical (sign-normalized, primitive) form of the certificate
/// matrix the witness word evaluates to.
const ProjectiveMatrix& certificate_matrix();

/// Run the seven certificate checks against a candidate word, in order:
/// length 82, freely reduced, matrix match, det 1, trace magnitude,
/// infinite order, base-vertex-pair stabilizer. All checks are evaluated;
/// first_failure names the earliest violated one.
VerificationReport verify_certificate(const Word& w);

/// The certificate checks on the built-in witness word.
VerificationReport verify_builtin_certificate();

}  // namespace treeact
