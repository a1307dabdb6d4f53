#include "treeact/rep_family.hpp"

#include "treeact/errors.hpp"

namespace treeact {

RepFamily make_family(const BigRational& t) {
  if (t == 0 || t == 1 || t == -1)
    throw degenerate_parameter_error("parameter t must avoid {0, 1, -1}, got " +
                                     t.get_str());
  RepFamily fam;
  fam.t = t;
  fam.gen_a = ProjectiveMatrix::from_rationals(t, 0, 0, 1);
  fam.gen_b = ProjectiveMatrix::from_rationals(BigRational(1) + t * t, 2, t, 1);
  fam.inv_a = inverse(fam.gen_a);
  fam.inv_b = inverse(fam.gen_b);
  return fam;
}

bool check_constraint(const RepFamily& fam) {
  const ProjectiveMatrix& b = fam.gen_b;
  const BigRational lhs = BigRational(2) * BigRational(b.m11) * BigRational(b.m22);
  const BigRational t_inv = BigRational(1) / fam.t;
  const BigRational rhs = (fam.t + t_inv) * BigRational(b.m12) * BigRational(b.m21);
  return lhs == rhs;
}

RelatorCheck check_relator(const RepFamily& fam) {
  RelatorCheck r;
  r.commutator = mul(mul(mul(fam.gen_a, fam.gen_b), fam.inv_a), fam.inv_b);
  r.trace_zero = trace(r.commutator) == 0;
  r.square_trivial = mul(r.commutator, r.commutator).is_identity();
  return r;
}

const RepFamily& long_reid_family() {
  static const RepFamily fam = make_family(9);
  return fam;
}

std::pair<ProjectiveMatrix, ProjectiveMatrix> long_reid_generators() {
  const RepFamily& fam = long_reid_family();
  return {fam.gen_a, fam.gen_b};
}

ProjectiveMatrix evaluate_word(const Word& w, const RepFamily& fam) {
  ProjectiveMatrix acc;
  for (Letter l : w) acc = mul(acc, fam.image(l));
  return acc;
}

}  // namespace treeact
