#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "treeact/projmat.hpp"

namespace treeact {

/// A prime p selects the Bruhat-Tits tree of PGL2(Q_p), which is
/// (p+1)-regular: p = 2 gives T_3, p = 3 gives T_4.
struct PrimeContext {
  unsigned long p;
  explicit PrimeContext(unsigned long p);  // throws on non-prime
};

/// Canonical coordinates of a tree vertex in the orbit of the base vertex
/// (the class of the standard lattice). A vertex at distance n >= 1
/// corresponds to the cyclic submodule of (Z/p^n)^2 spanned by a primitive
/// vector (x, y): branch 0 stores x*y^-1 when y is a unit mod p, branch 1
/// stores y*x^-1 (then divisible by p). There are (p+1)*p^(n-1) vertices
/// per sphere and exactly that many valid keys.
struct VertexKey {
  unsigned long p = 2;
  unsigned long n = 0;
  int branch = 0;
  BigInt residue = 0;

  bool operator==(const VertexKey& o) const {
    return p == o.p && n == o.n && branch == o.branch && residue == o.residue;
  }
  bool operator!=(const VertexKey& o) const { return !(*this == o); }
  bool operator<(const VertexKey& o) const;

  bool is_valid() const;
  std::string to_string() const;  // "p n branch residue", residue decimal
  static VertexKey parse(const std::string& s);
};

struct VertexKeyHash {
  std::size_t operator()(const VertexKey& k) const;
};

/// Tree distance from the base vertex to g * (base vertex):
/// v_p(det g) - 2 * (minimal entrywise p-valuation). For a canonical
/// (globally primitive) matrix the local content term is zero, but the
/// formula is implemented in full so scaled inputs behave.
unsigned long displacement(const ProjectiveMatrix& g, const PrimeContext& ctx);

/// Membership in PGL2(Z), the stabilizer of the base vertex pair of
/// T_3 x T_4: true iff |det| = 1 on the canonical representative.
/// Throws smoothness_error if |det| has a prime factor other than 2 or 3.
bool is_vertex_stabilizer(const ProjectiveMatrix& g);

/// Coordinates of g * (base vertex): the class of the column span of g.
/// vertex_key(g, p) == vertex_key(h, p) iff g^-1 h fixes the base vertex
/// of the p-tree; that equivalence is what makes meet-in-the-middle
/// collision detection sound and complete.
VertexKey vertex_key(const ProjectiveMatrix& g, const PrimeContext& ctx);

/// (vertex_key at p=2, vertex_key at p=3); equals the base pair iff
/// is_vertex_stabilizer(g). Same domain restriction as the latter.
std::pair<VertexKey, VertexKey> vertex_pair(const ProjectiveMatrix& g);

}  // namespace treeact
