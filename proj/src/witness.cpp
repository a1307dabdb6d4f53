#include "treeact/witness.hpp"

#include <sstream>

#include "treeact/errors.hpp"
#include "treeact/tree.hpp"

namespace treeact {

std::string OrderClass::to_string() const {
  if (!finite) return "infinite";
  return "finite(" + std::to_string(n) + ")";
}

OrderClass classify_order(const ProjectiveMatrix& g) {
  if (g.is_identity()) return OrderClass::finite_order(1);
  const BigInt d = det(g);
  const BigInt t2 = trace(g) * trace(g);
  if (t2 == 0) return OrderClass::finite_order(2);
  if (t2 == d) return OrderClass::finite_order(3);
  if (t2 == 2 * d) return OrderClass::finite_order(4);
  if (t2 == 3 * d) return OrderClass::finite_order(6);
  return OrderClass::infinite();
}

bool WitnessRecord::is_witness() const {
  return !order.finite && abs(det) == 1;
}

WitnessRecord make_record(std::string flat_word, const ProjectiveMatrix& m) {
  static const PrimeContext two(2), three(3);
  WitnessRecord r;
  r.word = std::move(flat_word);
  r.matrix = m;
  r.det = det(m);
  r.trace = trace(m);
  r.order = classify_order(m);
  r.displacement2 = displacement(m, two);
  r.displacement3 = displacement(m, three);
  return r;
}

WitnessRecord build_record(const Word& w, const RepFamily& fam) {
  return make_record(format_word(w), evaluate_word(w, fam));
}

const ProjectiveMatrix& certificate_matrix() {
  // Sign-normalized form of the displayed certificate matrix (its first
  // entry is negative in the source, so the class representative is the
  // negation).
  static const ProjectiveMatrix m = ProjectiveMatrix::from_integers(
      BigInt("646279884109511971664607"), BigInt("-6162511442411222450262052"),
      BigInt("4193268331567764626734"), BigInt("-39984323680432243295081"));
  return m;
}

namespace {

const char* const kTraceMagnitude = "606295560429079728369526";

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

VerificationReport verify_certificate(const Word& w) {
  VerificationReport rep;
  const ProjectiveMatrix m = evaluate_word(w, long_reid_family());
  const BigInt d = det(m);
  const BigInt tr_abs = abs(trace(m));
  const OrderClass order = classify_order(m);
  static const PrimeContext two(2), three(3);
  const unsigned long d2 = displacement(m, two);
  const unsigned long d3 = displacement(m, three);
  const bool stabilizer = abs(d) == 1;

  rep.checks.push_back({"word-length", "82", std::to_string(w.size()), w.size() == 82});
  rep.checks.push_back(
      {"freely-reduced", "true", bool_str(is_reduced(w)), is_reduced(w)});
  rep.checks.push_back({"matrix-match", certificate_matrix().to_string(),
                        m.to_string(), m == certificate_matrix()});
  rep.checks.push_back({"determinant", "1", d.get_str(), d == 1});
  rep.checks.push_back({"trace-magnitude", kTraceMagnitude, tr_abs.get_str(),
                        tr_abs == BigInt(kTraceMagnitude) && tr_abs > 2});
  rep.checks.push_back(
      {"order-infinite", "infinite", order.to_string(), order == OrderClass::infinite()});
  std::ostringstream stab_actual;
  stab_actual << "displacement2=" << d2 << " displacement3=" << d3
              << " stabilizer=" << bool_str(stabilizer);
  rep.checks.push_back({"vertex-stabilizer",
                        "displacement2=0 displacement3=0 stabilizer=true",
                        stab_actual.str(), d2 == 0 && d3 == 0 && stabilizer});

  rep.all_pass = true;
  for (const CheckResult& c : rep.checks) {
    if (!c.pass && rep.first_failure.empty()) rep.first_failure = c.name;
    rep.all_pass = rep.all_pass && c.pass;
  }
  rep.conclusion =
      rep.all_pass
          ? "certificate valid: Gamma meets PGL2(Z) in an infinite-order element, "
            "so the action on T3 x T4 is not proper"
          : "certificate INVALID: first violated check is '" + rep.first_failure + "'";
  return rep;
}

VerificationReport verify_builtin_certificate() {
  return verify_certificate(certificate_word());
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  std::size_t i = 0;
  for (const CheckResult& c : checks) {
    ++i;
    os << "[" << i << "/" << checks.size() << "] " << c.name << ": expected "
       << c.expected << ", actual " << c.actual << " ... "
       << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  os << "conclusion: " << conclusion << "\n";
  return os.str();
}

}  // namespace treeact
