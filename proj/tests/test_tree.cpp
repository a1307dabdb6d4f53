#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>

#include "treeact/errors.hpp"
#include "treeact/rep_family.hpp"
#include "treeact/tree.hpp"
#include "test_util.hpp"

using namespace treeact;
using test::random_matrix;
using test::random_reduced_word;

namespace {

ProjectiveMatrix pm(long a, long b, long c, long d) {
  return ProjectiveMatrix::from_integers(a, b, c, d);
}

const PrimeContext& ctx2() {
  static const PrimeContext c(2);
  return c;
}
const PrimeContext& ctx3() {
  static const PrimeContext c(3);
  return c;
}

unsigned long ipow(unsigned long b, unsigned long e) {
  unsigned long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("prime contexts validate primality") {
  CHECK_NOTHROW(PrimeContext(2));
  CHECK_NOTHROW(PrimeContext(3));
  CHECK_NOTHROW(PrimeContext(101));
  CHECK_THROWS_AS(PrimeContext(1), error);
  CHECK_THROWS_AS(PrimeContext(4), error);
  CHECK_THROWS_AS(PrimeContext(0), error);
}

TEST_CASE("displacement of the generators and identity") {
  const auto [a, b] = long_reid_generators();
  CHECK(displacement(a, ctx2()) == 0);
  CHECK(displacement(a, ctx3()) == 2);
  CHECK(displacement(b, ctx2()) == 6);
  CHECK(displacement(b, ctx3()) == 0);
  CHECK(displacement(ProjectiveMatrix::identity(), ctx2()) == 0);
  CHECK(displacement(ProjectiveMatrix::identity(), ctx3()) == 0);
  CHECK(displacement(pm(10, -164, 1, -10), ctx2()) == 6);  // the commutator
  CHECK(displacement(pm(10, -164, 1, -10), ctx3()) == 0);
}

TEST_CASE("displacement symmetry, parity, and triangle inequality") {
  std::mt19937 rng(41);
  const RepFamily& fam = long_reid_family();
  for (int i = 0; i < 200; ++i) {
    const ProjectiveMatrix g = evaluate_word(random_reduced_word(rng, 8), fam);
    const ProjectiveMatrix h = evaluate_word(random_reduced_word(rng, 8), fam);
    for (const PrimeContext* ctx : {&ctx2(), &ctx3()}) {
      CHECK(displacement(g, *ctx) == displacement(inverse(g), *ctx));
      CHECK(displacement(mul(g, h), *ctx) <= displacement(g, *ctx) + displacement(h, *ctx));
      CHECK(displacement(g, *ctx) % 2 == valuation(det(g), ctx->p) % 2);
    }
  }
  // also on matrices outside the t=9 image
  for (int i = 0; i < 200; ++i) {
    const ProjectiveMatrix g = random_matrix(rng);
    for (const PrimeContext* ctx : {&ctx2(), &ctx3()}) {
      CHECK(displacement(g, *ctx) == displacement(inverse(g), *ctx));
      CHECK(displacement(g, *ctx) % 2 == valuation(det(g), ctx->p) % 2);
    }
  }
}

TEST_CASE("base-vertex-pair stabilizer membership") {
  CHECK(is_vertex_stabilizer(ProjectiveMatrix::identity()));
  CHECK(is_vertex_stabilizer(pm(0, -1, 1, 0)));
  CHECK(is_vertex_stabilizer(pm(1, 1, 0, 1)));
  CHECK_FALSE(is_vertex_stabilizer(pm(9, 0, 0, 1)));   // det 9
  CHECK_FALSE(is_vertex_stabilizer(pm(82, 2, 9, 1)));  // det 64
  CHECK_FALSE(is_vertex_stabilizer(pm(2, 3, 3, 3)));   // det -3
  CHECK_THROWS_AS(is_vertex_stabilizer(pm(1, 0, 0, 5)), smoothness_error);
  CHECK_THROWS_AS(is_vertex_stabilizer(pm(7, 0, 0, 1)), smoothness_error);
}

TEST_CASE("vertex keys of worked elements") {
  const auto [a, b] = long_reid_generators();
  const VertexKey base2 = vertex_key(ProjectiveMatrix::identity(), ctx2());
  CHECK(base2.p == 2);
  CHECK(base2.n == 0);
  CHECK(base2.branch == 0);
  CHECK(base2.residue == 0);

  const VertexKey ka3 = vertex_key(a, ctx3());
  CHECK(ka3.n == 2);
  CHECK(ka3.branch == 0);
  CHECK(ka3.residue == 0);  // image lattice 9Z3 + Z3, generated by (0,1)

  const VertexKey kb2 = vertex_key(b, ctx2());
  CHECK(kb2.n == 6);
  CHECK(kb2.branch == 0);
  // column span of [[82,2],[9,1]] mod 64 is generated by (2,1): the first
  // column (82,9) = 9*(2,1) + (0,0) mod 64, so the residue is 2*1^-1 = 2
  CHECK(kb2.residue == 2);
  CHECK(vertex_key(b, ctx3()) == vertex_key(ProjectiveMatrix::identity(), ctx3()));

  const VertexKey kc2 = vertex_key(pm(10, -164, 1, -10), ctx2());
  CHECK(kc2.n == 6);
  CHECK(kc2.branch == 0);
  CHECK(kc2.residue == 10);
}

TEST_CASE("vertex key n always equals displacement") {
  std::mt19937 rng(42);
  const RepFamily& fam = long_reid_family();
  for (int i = 0; i < 300; ++i) {
    const ProjectiveMatrix g = evaluate_word(random_reduced_word(rng, 8), fam);
    CHECK(vertex_key(g, ctx2()).n == displacement(g, ctx2()));
    CHECK(vertex_key(g, ctx3()).n == displacement(g, ctx3()));
  }
}

TEST_CASE("key validity rules and serialization") {
  VertexKey k;
  k.p = 2;
  CHECK(k.is_valid());  // base vertex

  k.n = 0;
  k.branch = 1;
  CHECK_FALSE(k.is_valid());
  k.branch = 0;
  k.residue = 1;
  CHECK_FALSE(k.is_valid());

  k = VertexKey{3, 2, 1, 3};
  CHECK(k.is_valid());  // branch 1 residue divisible by 3
  k.residue = 4;
  CHECK_FALSE(k.is_valid());  // 4 not divisible by 3
  k.residue = 9;
  CHECK_FALSE(k.is_valid());  // out of range [0, 9)

  const VertexKey kb = vertex_key(long_reid_generators().second, ctx2());
  CHECK(kb.to_string() == "2 6 0 2");
  CHECK(VertexKey::parse("2 6 0 2") == kb);
  CHECK(VertexKey::parse(kb.to_string()) == kb);
  CHECK_THROWS_AS(VertexKey::parse("2 6 0"), error);
  CHECK_THROWS_AS(VertexKey::parse("2 6 0 x"), error);

  VertexKeyHash h;
  CHECK(h(kb) == h(VertexKey::parse("2 6 0 2")));
}

TEST_CASE("sphere counts match (p+1)p^(n-1) for n up to 5") {
  for (unsigned long p : {2ul, 3ul}) {
    for (unsigned long n = 1; n <= 5; ++n) {
      const unsigned long pn = ipow(p, n);
      unsigned long count = 0;
      for (int branch = 0; branch <= 1; ++branch)
        for (unsigned long r = 0; r < pn; ++r) {
          VertexKey k{p, n, branch, BigInt(static_cast<unsigned long>(r))};
          if (k.is_valid()) ++count;
        }
      CHECK(count == (p + 1) * ipow(p, n - 1));
    }
  }
}

TEST_CASE("stabilizer coherence: equal vertex pairs iff integral quotient") {
  std::mt19937 rng(43);
  const RepFamily& fam = long_reid_family();
  int equal_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const Word u = random_reduced_word(rng, 6);
    // every seventh pair is forced equal so the "same pair" branch is hit
    const Word w = (i % 7 == 0) ? u : random_reduced_word(rng, 6);
    const ProjectiveMatrix gu = evaluate_word(u, fam), gw = evaluate_word(w, fam);
    const bool same_pair = vertex_pair(gu) == vertex_pair(gw);
    const bool quotient_integral =
        is_vertex_stabilizer(evaluate_word(concat(invert_word(u), w), fam));
    CHECK(same_pair == quotient_integral);
    if (same_pair) ++equal_seen;
  }
  CHECK(equal_seen >= 300 / 7);

  // distinct words, equal elements: the relator makes abAB its own inverse
  const ProjectiveMatrix c1 = evaluate_word(parse_word("abAB"), fam);
  const ProjectiveMatrix c2 = evaluate_word(parse_word("baBA"), fam);
  CHECK(c1 == c2);
  CHECK(vertex_pair(c1) == vertex_pair(c2));
}

TEST_CASE("vertex pairs of worked elements") {
  const auto [a, b] = long_reid_generators();
  const auto base = vertex_pair(ProjectiveMatrix::identity());
  CHECK(base.first == VertexKey::parse("2 0 0 0"));
  CHECK(base.second == VertexKey::parse("3 0 0 0"));

  const auto pb = vertex_pair(b);
  CHECK(pb.first == VertexKey::parse("2 6 0 2"));
  CHECK(pb.second == VertexKey::parse("3 0 0 0"));

  const auto pc = vertex_pair(pm(10, -164, 1, -10));
  CHECK(pc.first.n == 6);
  CHECK(pc.second == VertexKey::parse("3 0 0 0"));

  CHECK_THROWS_AS(vertex_pair(pm(1, 0, 0, 5)), smoothness_error);
}
