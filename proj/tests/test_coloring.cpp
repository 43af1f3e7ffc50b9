#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "eisenfold/coloring.hpp"

using namespace eisenfold;

namespace {

EisensteinInt E(long a, long b) { return {BigInt(a), BigInt(b)}; }

// Independent goodness oracle: counts black faces around each vertex by
// scanning all face corners, without using the vertex stars.
bool brute_good(const FaceColoring& col) {
  const auto& c = col.complex();
  std::vector<int> black(c.vertex_count(), 0), deg(c.vertex_count(), 0);
  for (int f = 0; f < c.face_count(); ++f) {
    for (int v : c.face_vertices()[f]) {
      ++deg[v];
      black[v] += col[f] == Color::Black;
    }
  }
  for (int v = 0; v < c.vertex_count(); ++v)
    if ((2 * black[v] - deg[v]) % 3 != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("fold counts of the Fibonacci colorings") {
  const auto c = make_complex(E(2, 3));
  CHECK(fold_count(alternating_coloring(c)) == 57);
  const auto cf = continued_fraction_coloring(E(2, 3));
  CHECK(fold_count(cf) == 23);
  CHECK(fold_count(continued_fraction_coloring(E(1, 2))) == 13);
  CHECK(fold_count(continued_fraction_coloring(E(3, 5))) == 39);
  CHECK(fold_count(continued_fraction_coloring(E(8, 13))) == 107);
  CHECK(continued_fraction_coloring(E(8, 13)).face_count() == 674);
  CHECK(fold_count(alternating_coloring(make_complex(E(1, 0)))) == 3);
  CHECK(fold_count(alternating_coloring(make_complex(E(1, 2)))) == 21);
  CHECK(fold_count(FaceColoring::uniform(c, Color::Black)) == 0);
  CHECK_THROWS_AS(continued_fraction_coloring(E(2, 4)), DomainError);
  CHECK_THROWS_AS(continued_fraction_coloring(E(0, 1)), DomainError);
}

TEST_CASE("goodness") {
  const auto c = make_complex(E(2, 3));
  CHECK(is_good(alternating_coloring(c)).good);
  for (long a : {1L, 2L, 3L}) {
    const auto all_black = FaceColoring::uniform(make_complex(E(a, a + 1)), Color::Black);
    const auto r = is_good(all_black);
    CHECK_FALSE(r.good);
    CHECK(r.violations.size() == 3);
  }
  auto alt = alternating_coloring(make_complex(E(1, 2)));
  for (int f = 0; f < alt.face_count(); ++f) {
    auto colors = alt.colors();
    colors[f] = opposite(colors[f]);
    const FaceColoring flipped(alt.complex_ptr(), colors);
    REQUIRE_FALSE(is_good(flipped).good);
    REQUIRE_FALSE(brute_good(flipped));
  }
}

TEST_CASE("balance and mod 6 on C(beta)") {
  const auto cf = continued_fraction_coloring(E(2, 3));
  CHECK(color_balance(cf).black == 19);
  CHECK(color_balance(cf).white == 19);
  const auto t1 = FaceColoring::uniform(make_complex(E(1, 0)), Color::Black);
  CHECK(color_balance(t1).black == 2);
  CHECK(color_balance(t1).white == 0);
  for (long b = 1; b <= 34; ++b) {
    for (long a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const auto col = continued_fraction_coloring(E(a, b));
      const auto r = is_good(col);
      REQUIRE(r.good);
      REQUIRE(r.mod6);
      REQUIRE(brute_good(col));
      REQUIRE(color_balance(col).black == color_balance(col).white);
    }
  }
}

TEST_CASE("convention independence") {
  for (long b = 1; b <= 21; ++b) {
    for (long a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const auto c = make_complex(E(a, b));
      const auto flower = CappedFlower::build(E(a, b));
      const auto base = continued_fraction_coloring(c, flower);
      const auto f0 = fold_count(base);
      for (const auto& variant : {flower.with_swapped_colors(), flower.with_alternate_fill(),
                                  flower.with_swapped_colors().with_alternate_fill()}) {
        const auto col = continued_fraction_coloring(c, variant);
        REQUIRE(fold_count(col) == f0);
        REQUIRE(is_good(col).good);
      }
      REQUIRE(fold_count(alternating_coloring(c)) == 3 * c->face_count() / 2);
    }
  }
}

TEST_CASE("eta") {
  CHECK(eta(continued_fraction_coloring(E(1, 2))) == BigRational(169, 14));
  CHECK(eta(alternating_coloring(make_complex(E(1, 0)))) == BigRational(9, 2));
  CHECK(eta(continued_fraction_coloring(E(2, 3))) == BigRational(529, 38));
}

TEST_CASE("vertex four-coloring") {
  const auto t1 = make_complex(E(1, 0));
  const FaceColoring bw(t1, {Color::Black, Color::White});
  const auto vc1 = vertex_four_coloring(bw);
  CHECK(std::set<int>(vc1.begin(), vc1.end()).size() == 3);

  const auto cf = continued_fraction_coloring(E(2, 3));
  const auto vc = vertex_four_coloring(cf);
  CHECK(vc.size() == 21);
  CHECK(induced_face_coloring(cf.complex_ptr(), vc) == cf);
  for (int f = 0; f < cf.face_count(); ++f) {
    const auto& v = cf.complex().face_vertices()[f];
    REQUIRE(vc[v[0]] != vc[v[1]]);
    REQUIRE(vc[v[1]] != vc[v[2]]);
    REQUIRE(vc[v[0]] != vc[v[2]]);
  }
  const auto alt = alternating_coloring(make_complex(E(3, 5)));
  const auto va = vertex_four_coloring(alt);
  CHECK(std::set<int>(va.begin(), va.end()).size() == 3);
  CHECK(induced_face_coloring(alt.complex_ptr(), va) == alt);
  CHECK_THROWS_AS(vertex_four_coloring(FaceColoring::uniform(cf.complex_ptr(), Color::Black)), DomainError);
}

TEST_CASE("monochrome regions") {
  for (long b = 1; b <= 13; ++b) {
    for (long a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const auto col = continued_fraction_coloring(E(a, b));
      const auto regions = monochrome_regions(col);
      std::int64_t white_boundary = 0, white_faces = 0;
      for (const auto& r : regions) {
        const auto& poly = r.lifted_polygon;
        REQUIRE(poly.size() >= 3);
        REQUIRE(poly.size() <= 6);
        if (r.color == Color::White) {
          white_boundary += r.boundary_length;
          white_faces += static_cast<std::int64_t>(r.faces.size());
        }
      }
      REQUIRE(white_boundary == fold_count(col));
      REQUIRE(white_faces == color_balance(col).white);
      const auto rep = region_isoperimetric_check(col);
      REQUIRE(rep.ok());
    }
  }
  const auto alt = alternating_coloring(make_complex(E(2, 3)));
  for (const auto& r : monochrome_regions(alt)) {
    REQUIRE(r.faces.size() == 1);
    REQUIRE(r.boundary_length == 3);
  }
  CHECK_THROWS_AS(monochrome_regions(FaceColoring::uniform(alt.complex_ptr(), Color::White)), DomainError);
}

TEST_CASE("special hexagons") {
  const double s3 = std::sqrt(3.0);
  CHECK(special_hexagon_area({{1, 1, 1, 1, 1, 1}}) == doctest::Approx(3 * s3 / 2));
  CHECK(special_hexagon_area({{1, 0, 1, 0, 1, 0}}) == doctest::Approx(s3 / 4));
  CHECK(special_hexagon_area({{2, 1, 1, 2, 1, 1}}) == doctest::Approx(5 * s3 / 2));
  const SpecialHexagon open{{1, 2, 3, 4, 5, 6}};
  CHECK_THROWS_AS(open.triangle_count(), DomainError);
  // Regular hexagon of side s holds 6 s^2 triangles: ratio exactly 6.
  for (std::int64_t s = 1; s <= 5; ++s) {
    const SpecialHexagon h{{s, s, s, s, s, s}};
    CHECK(h.triangle_count() == 6 * s * s);
    CHECK(h.perimeter() * h.perimeter() == 6 * h.triangle_count());
  }
}
