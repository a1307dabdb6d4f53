#include "treeact/tree.hpp"

#include <algorithm>
#include <sstream>

#include "treeact/errors.hpp"

namespace treeact {

PrimeContext::PrimeContext(unsigned long p_) : p(p_) {
  BigInt z(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    throw invalid_prime_error("PrimeContext requires a prime, got " + std::to_string(p));
}

bool VertexKey::operator<(const VertexKey& o) const {
  if (p != o.p) return p < o.p;
  if (n != o.n) return n < o.n;
  if (branch != o.branch) return branch < o.branch;
  return residue < o.residue;
}

bool VertexKey::is_valid() const {
  if (n == 0) return branch == 0 && residue == 0;
  if (branch != 0 && branch != 1) return false;
  if (residue < 0) return false;
  BigInt pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  if (residue >= pn) return false;
  if (branch == 1 && residue % static_cast<unsigned long>(p) != 0) return false;
  return true;
}

std::string VertexKey::to_string() const {
  std::ostringstream os;
  os << p << ' ' << n << ' ' << branch << ' ' << residue;
  return os.str();
}

VertexKey VertexKey::parse(const std::string& s) {
  std::istringstream is(s);
  VertexKey k;
  std::string res;
  if (!(is >> k.p >> k.n >> k.branch >> res))
    throw error("malformed vertex key: " + s);
  if (k.residue.set_str(res, 10) != 0) throw error("malformed vertex key residue: " + res);
  if (!k.is_valid()) throw error("invalid vertex key: " + s);
  return k;
}

std::size_t VertexKeyHash::operator()(const VertexKey& k) const {
  std::size_t h = k.p * 0x9e3779b97f4a7c15ull + k.n;
  h = (h << 1) ^ static_cast<std::size_t>(k.branch);
  return h * 0x100000001b3ull ^ hash_bigint(k.residue);
}

namespace {

// Minimal entrywise p-valuation; the p-local content exponent.
unsigned long local_content(const ProjectiveMatrix& g, unsigned long p) {
  unsigned long c = ~0ul;
  for (const BigInt* e : {&g.m11, &g.m12, &g.m21, &g.m22}) {
    if (*e == 0) continue;
    c = std::min(c, valuation(*e, p));
    if (c == 0) return 0;
  }
  return c;  // some entry is nonzero (det != 0)
}

}  // namespace

unsigned long displacement(const ProjectiveMatrix& g, const PrimeContext& ctx) {
  return valuation(det(g), ctx.p) - 2 * local_content(g, ctx.p);
}

bool is_vertex_stabilizer(const ProjectiveMatrix& g) {
  BigInt d = abs(det(g));
  BigInt two(2), three(3);
  const unsigned long v2 = mpz_remove(d.get_mpz_t(), d.get_mpz_t(), two.get_mpz_t());
  const unsigned long v3 = mpz_remove(d.get_mpz_t(), d.get_mpz_t(), three.get_mpz_t());
  if (d != 1)
    throw smoothness_error("|det| = " + BigInt(abs(det(g))).get_str() +
                           " has a prime factor other than 2 or 3; element is outside "
                           "PGL2(Z[1/6])");
  return v2 == 0 && v3 == 0;
}

VertexKey vertex_key(const ProjectiveMatrix& g, const PrimeContext& ctx) {
  const unsigned long p = ctx.p;
  VertexKey key;
  key.p = p;
  key.n = displacement(g, ctx);
  if (key.n == 0) return key;

  // p-primitive representative (canonical inputs are already primitive)
  BigInt e[4] = {g.m11, g.m12, g.m21, g.m22};
  const unsigned long c = local_content(g, p);
  if (c > 0) {
    BigInt pc;
    mpz_ui_pow_ui(pc.get_mpz_t(), p, c);
    for (BigInt& x : e) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pc.get_mpz_t());
  }

  BigInt pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, key.n);

  // Either column that is primitive mod p spans the image lattice mod p^n;
  // when both are primitive they span the same submodule, so prefer column 1.
  const bool col1_primitive = e[0] % p != 0 || e[2] % p != 0;
  const BigInt& x = col1_primitive ? e[0] : e[1];
  const BigInt& y = col1_primitive ? e[2] : e[3];

  BigInt inv;
  if (y % p != 0) {
    key.branch = 0;
    if (mpz_invert(inv.get_mpz_t(), y.get_mpz_t(), pn.get_mpz_t()) == 0)
      throw error("internal: unit entry not invertible mod p^n");
    key.residue = x * inv % pn;
  } else {
    key.branch = 1;
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), pn.get_mpz_t()) == 0)
      throw error("internal: unit entry not invertible mod p^n");
    key.residue = y * inv % pn;
  }
  if (key.residue < 0) key.residue += pn;
  return key;
}

std::pair<VertexKey, VertexKey> vertex_pair(const ProjectiveMatrix& g) {
  is_vertex_stabilizer(g);  // domain check: det must be 2-3-smooth
  static const PrimeContext two(2), three(3);
  return {vertex_key(g, two), vertex_key(g, three)};
}

}  // namespace treeact
