#pragma once

#include <utility>

#include "treeact/projmat.hpp"
#include "treeact/words.hpp"

namespace treeact {

/// The one-parameter representation family of <a,b | [a,b]^2 = 1> into
/// PGL2: gen_a = [[t,0],[0,1]], gen_b = [[1+t^2,2],[t,1]], stored as
/// canonical primitive representatives. t = 9 gives the Long-Reid group
/// inside PGL2(Z[1/6]).
struct RepFamily {
  BigRational t;
  ProjectiveMatrix gen_a, gen_b;
  ProjectiveMatrix inv_a, inv_b;  // cached adjugates

  const ProjectiveMatrix& image(Letter l) const {
    switch (l) {
      case Letter::a: return gen_a;
      case Letter::A: return inv_a;
      case Letter::b: return gen_b;
      default: return inv_b;
    }
  }
};

/// Throws degenerate_parameter_error for t in {0, 1, -1}.
RepFamily make_family(const BigRational& t);

/// The trace-zero condition on gen_b: 2*b11*b22 = (t + 1/t)*b12*b21,
/// checked exactly on the canonical entries (both sides are quadratic in
/// b, so canonicalization does not disturb it).
bool check_constraint(const RepFamily& fam);

struct RelatorCheck {
  ProjectiveMatrix commutator;  // canonical form of a b a^-1 b^-1
  bool trace_zero;
  bool square_trivial;
};

RelatorCheck check_relator(const RepFamily& fam);

/// Generators of the Long-Reid group: make_family(9), the default
/// evaluation context of the whole artifact.
std::pair<ProjectiveMatrix, ProjectiveMatrix> long_reid_generators();

const RepFamily& long_reid_family();

/// Left-to-right product of generator images; empty word gives identity.
ProjectiveMatrix evaluate_word(const Word& w, const RepFamily& fam);

}  // namespace treeact
