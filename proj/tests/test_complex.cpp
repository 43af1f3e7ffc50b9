#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "eisenfold/complex.hpp"

using namespace eisenfold;

namespace {

EisensteinInt E(long a, long b) { return {BigInt(a), BigInt(b)}; }

std::vector<int> expected_degrees(long norm) {
  std::vector<int> d{2, 2, 2};
  d.insert(d.end(), static_cast<std::size_t>(norm - 1), 6);
  return d;
}

// Independent check: glued faces lift to triangles that become edge-adjacent
// after applying an element of G_beta (a rotation about 0 by w^k plus a
// translation by delta*E). Tested through the face projection of the planar
// neighbor across the glued side.
void check_pairing_geometry(const QuotientComplex& c) {
  for (int f = 0; f < c.face_count(); ++f) {
    const PlaneTriangle& t = c.lift(f);
    for (int s = 0; s < 3; ++s) {
      const SideRef o = c.glued({f, s});
      const PlaneTriangle nb = t.neighbor(s);
      REQUIRE(c.project(nb).face == o.face);
    }
  }
}

}  // namespace

TEST_CASE("counts on small examples") {
  const auto c = QuotientComplex::build(E(2, 3));
  CHECK(c.face_count() == 38);
  CHECK(c.vertex_count() == 21);
  CHECK(c.degree_sequence() == expected_degrees(19));

  const auto one = QuotientComplex::build(E(1, 0));
  CHECK(one.face_count() == 2);
  CHECK(one.vertex_count() == 3);
  CHECK(one.degree_sequence() == std::vector<int>{2, 2, 2});

  CHECK(QuotientComplex::build(E(3, 5)).face_count() == 98);
  CHECK(QuotientComplex::build(E(1, 2)).degree_sequence() == std::vector<int>{2, 2, 2, 6, 6, 6, 6, 6, 6});

  const auto big = QuotientComplex::build(E(8, 13));
  CHECK(big.face_count() == 674);
  CHECK(big.vertex_count() == 339);
  CHECK(big.degree_sequence() == expected_degrees(337));

  CHECK_THROWS_AS(QuotientComplex::build(E(0, 0)), DomainError);
}

TEST_CASE("non-primitive and unit-equivalent beta are supported") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{2, 4}, {3, 3}, {0, 5}, {1, 1}, {-4, 7}}) {
    const auto c = QuotientComplex::build(E(a, b));
    const long n = E(a, b).norm().get_si();
    CHECK(c.face_count() == 2 * n);
    CHECK(c.degree_sequence() == expected_degrees(n));
  }
}

TEST_CASE("structural invariants for all primitive beta with b <= 34") {
  for (long b = 1; b <= 34; ++b) {
    for (long a = 0; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const auto c = QuotientComplex::build(E(a, b));
      const long n = a * a + a * b + b * b;
      REQUIRE(c.face_count() == 2 * n);
      REQUIRE(c.vertex_count() == n + 2);
      REQUIRE(c.vertex_count() - c.edge_count() + c.face_count() == 2);
      REQUIRE(c.degree_sequence() == expected_degrees(n));
      for (int f = 0; f < c.face_count(); ++f) {
        for (int s = 0; s < 3; ++s) {
          const SideRef o = c.glued({f, s});
          REQUIRE_FALSE(o == SideRef{f, s});
          REQUIRE(c.glued(o) == SideRef{f, s});
        }
      }
    }
  }
}

TEST_CASE("projection is a G_beta invariant section") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {3, 5}, {4, 7}}) {
    const auto c = QuotientComplex::build(E(a, b));
    for (int f = 0; f < c.face_count(); ++f) REQUIRE(c.project(c.lift(f)).face == f);
    check_pairing_geometry(c);
    const LatticePoint beta = c.beta();
    const LatticePoint delta = c.delta();
    std::mt19937_64 rng(a * 100 + b);
    std::uniform_int_distribution<long> d(-200, 200);
    for (int i = 0; i < 10000; ++i) {
      const PlaneTriangle t{{d(rng), d(rng)}, i % 2 ? Orientation::Up : Orientation::Down};
      const Projection p = c.project(t);
      REQUIRE(p.motion.apply(t) == c.lift(p.face));
      // Translation by delta.
      REQUIRE(c.project(Motion{0, delta}.apply(t)).face == p.face);
      // Rotation by w = alpha^2 about 0.
      REQUIRE(c.project(Motion{1, {0, 0}}.apply(t)).face == p.face);
      // Rotation by w about beta: z -> w (z - beta) + beta.
      REQUIRE(c.project(Motion{1, beta - beta.rotated(2)}.apply(t)).face == p.face);
    }
  }
}

TEST_CASE("vertex stars are consistent with faces") {
  const auto c = QuotientComplex::build(E(2, 3));
  std::map<int, int> corner_count;
  for (int v = 0; v < c.vertex_count(); ++v) {
    const auto& vo = c.vertices()[v];
    REQUIRE(static_cast<int>(vo.star.size()) == vo.degree);
    for (const Corner& k : vo.star) {
      REQUIRE(c.face_vertices()[k.face][k.corner] == v);
      ++corner_count[k.face * 3 + k.corner];
    }
  }
  // Every face corner appears in exactly one star.
  CHECK(corner_count.size() == static_cast<std::size_t>(3 * c.face_count()));
  for (const auto& [key, n] : corner_count) REQUIRE(n == 1);
}
