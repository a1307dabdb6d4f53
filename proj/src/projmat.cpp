#include "treeact/projmat.hpp"

#include <sstream>

#include "treeact/errors.hpp"

namespace treeact {

namespace {

BigInt content(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  BigInt g = gcd(a, b);
  g = gcd(g, c);
  g = gcd(g, d);
  return g;  // nonnegative; 0 only for the zero matrix
}

}  // namespace

ProjectiveMatrix ProjectiveMatrix::from_integers(const BigInt& a, const BigInt& b,
                                                 const BigInt& c, const BigInt& d) {
  BigInt g = content(a, b, c, d);
  if (g == 0) throw singular_matrix_error("zero matrix has no projective class");
  ProjectiveMatrix m;
  mpz_divexact(m.m11.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(m.m12.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(m.m21.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(m.m22.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  if (det(m) == 0) throw singular_matrix_error("matrix is singular");
  // leading-positive sign normalization
  const BigInt* lead = &m.m11;
  if (*lead == 0) lead = &m.m12;
  if (*lead == 0) lead = &m.m21;
  if (*lead == 0) lead = &m.m22;
  if (*lead < 0) {
    m.m11 = -m.m11;
    m.m12 = -m.m12;
    m.m21 = -m.m21;
    m.m22 = -m.m22;
  }
  return m;
}

ProjectiveMatrix ProjectiveMatrix::from_rationals(const BigRational& a, const BigRational& b,
                                                  const BigRational& c, const BigRational& d) {
  BigInt l = lcm(a.get_den(), b.get_den());
  l = lcm(l, c.get_den());
  l = lcm(l, d.get_den());
  auto scaled = [&l](const BigRational& q) -> BigInt {
    BigInt s;
    mpz_divexact(s.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return BigInt(q.get_num() * s);
  };
  return from_integers(scaled(a), scaled(b), scaled(c), scaled(d));
}

bool ProjectiveMatrix::is_canonical() const {
  if (content(m11, m12, m21, m22) != 1) return false;
  const BigInt* lead = &m11;
  if (*lead == 0) lead = &m12;
  if (*lead == 0) lead = &m21;
  if (*lead == 0) lead = &m22;
  return *lead > 0 && det(*this) != 0;
}

std::string ProjectiveMatrix::to_string() const {
  std::ostringstream os;
  os << "[[" << m11 << ", " << m12 << "], [" << m21 << ", " << m22 << "]]";
  return os.str();
}

ProjectiveMatrix mul(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
  return ProjectiveMatrix::from_integers(
      x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
      x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22);
}

ProjectiveMatrix inverse(const ProjectiveMatrix& x) {
  return ProjectiveMatrix::from_integers(x.m22, -x.m12, -x.m21, x.m11);
}

BigInt det(const ProjectiveMatrix& x) { return x.m11 * x.m22 - x.m12 * x.m21; }

BigInt trace(const ProjectiveMatrix& x) { return x.m11 + x.m22; }

unsigned long valuation(const BigInt& n, unsigned long p) {
  if (n == 0) throw undefined_valuation_error("valuation of 0 is undefined");
  BigInt rest, prime(static_cast<unsigned long>(p));
  return static_cast<unsigned long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

std::size_t hash_bigint(const BigInt& z) {
  const mpz_srcptr raw = z.get_mpz_t();
  std::size_t h = mpz_sgn(raw) < 0 ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
  const mp_size_t n = mpz_size(raw);
  for (mp_size_t i = 0; i < n; ++i)
    h = (h ^ static_cast<std::size_t>(mpz_getlimbn(raw, i))) * 0x2545f4914f6cdd1dull;
  return h;
}

std::size_t ProjectiveMatrixHash::operator()(const ProjectiveMatrix& m) const {
  std::size_t h = hash_bigint(m.m11);
  h = h * 0x100000001b3ull ^ hash_bigint(m.m12);
  h = h * 0x100000001b3ull ^ hash_bigint(m.m21);
  h = h * 0x100000001b3ull ^ hash_bigint(m.m22);
  return h;
}

}  // namespace treeact
