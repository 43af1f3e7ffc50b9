#pragma once

// Trapezoid necklaces, empty/filled/capped flowers and the planar coloring
// obtained by tiling the plane with translates of a capped flower.
//
// All geometry is exact: points are Eisenstein lattice points, and a unit
// triangle is classified by its tripled centroid, which never lies on a region
// boundary.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "eisenfold/complex.hpp"
#include "eisenfold/eisenstein.hpp"

namespace eisenfold {

enum class Color : std::uint8_t { Black = 0, White = 1 };

constexpr Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

// Where the model trapezoid of its aspect lands: offset + alpha^rotation * m(model),
// with m the identity or complex conjugation.
struct Placement {
  LatticePoint offset;
  int rotation = 0;
  bool mirrored = false;
};

// Isosceles lattice trapezoid with diagonal sides of length `diag`, top of
// length `top` and bottom of length top - diag (zero: isosceles triangle).
//
// The corners carry roles relative to the necklace it belongs to. The hinge is
// the top corner shared with the next trapezoid of the necklace; tip_foot is
// the bottom corner shared with the previous one:
//   hinge - center = alpha^chirality * (tip_foot - center).
// Diagonals join hinge--hinge_foot and tip--tip_foot.
struct Trapezoid {
  std::int64_t diag = 0;
  std::int64_t top = 0;
  LatticePoint hinge, tip, hinge_foot, tip_foot;
  int chirality = 1;

  std::int64_t bottom() const { return top - diag; }
  bool degenerate() const { return hinge_foot == tip_foot; }
  std::array<LatticePoint, 4> ccw_vertices() const;
  // Strict interior test on a tripled point.
  bool contains3(const LatticePoint& p3) const;
  // Unit triangles inside, counted exactly: diag * (2 top - diag).
  std::int64_t area() const { return diag * (2 * top - diag); }
  Placement placement(const LatticePoint& center) const;
};

// Model trapezoid of aspect a/b with the necklace centered at 0:
// tip a+b alpha, hinge (a-b)+b alpha, hinge_foot (2a-b)+(b-a) alpha, tip_foot a+(b-a) alpha.
Trapezoid model_trapezoid(std::int64_t a, std::int64_t b);

struct Necklace {
  LatticePoint center;
  std::int64_t diag = 0;  // aspect diag/top
  std::int64_t top = 0;
  int chirality = 1;
  std::array<Trapezoid, 6> trapezoids;  // trapezoids[k+1] = rotation by alpha about center of trapezoids[k]

  PosRational aspect() const { return PosRational(static_cast<long>(diag), static_cast<long>(top)); }
  // Outer boundary length: six tops plus six outer diagonals.
  std::int64_t outer_perimeter() const { return 6 * (top + diag); }
};

// The unique necklace of aspect a/b (reduced, a <= b) in model position about `center`.
Necklace necklace(const PosRational& aspect, const LatticePoint& center);

// The necklace nested inside x: same center, aspect slow_gauss(aspect(x)).
// The child's top is a side of a trapezoid of x and one of its diagonals is a
// side of the adjacent trapezoid; the child is mirrored when aspect(x) > 1/2.
Necklace necklace_gamma(const Necklace& x);

struct ColoredNecklace {
  Necklace necklace;
  Color color;
};

// Necklaces of the whole gamma-orbit of `aspect`, outermost first, colors
// alternating with the innermost (1/1) necklace White.
std::vector<ColoredNecklace> empty_flower(const PosRational& aspect, const LatticePoint& center = {});

class CappedFlower {
 public:
  // beta must be primitive with canonical form 1 <= a <= b.
  static CappedFlower build(const EisensteinInt& beta);

  const LatticePoint& beta() const { return beta_; }
  const LatticePoint& delta() const { return delta_; }
  const std::vector<ColoredNecklace>& necklaces() const { return necklaces_; }
  const std::array<PlaneTriangle, 6>& fill() const { return fill_; }
  Color fill_color(int k) const { return k % 2 == 0 ? fill_start_ : opposite(fill_start_); }
  Color cap_color() const { return cap_color_; }

  // Color of any unit triangle of the plane under the hexagonal tiling by
  // translates of this capped flower.
  Color color_at(const PlaneTriangle& t) const;

  enum class Region : std::uint8_t { Necklace, Fill, Cap };
  struct Classification {
    Region region;
    int necklace = -1;  // index into necklaces() for Region::Necklace
    int trapezoid = -1;
    int fill_index = -1;
    Color color;
  };
  // Classifies a triangle of the central hexagon (after translating into it).
  Classification classify(const PlaneTriangle& t) const;

  // Three times the tiling center (a point of delta*E) owning the tripled point p3.
  LatticePoint home_center3(const LatticePoint& p3) const;

  // Variants for the convention-independence checks.
  CappedFlower with_swapped_colors() const;
  CappedFlower with_alternate_fill() const;

 private:
  LatticePoint beta_, delta_;
  std::vector<ColoredNecklace> necklaces_;
  std::array<PlaneTriangle, 6> fill_{};
  Color fill_start_ = Color::Black;
  Color cap_color_ = Color::Black;
};

// Exact census of the central hexagon (the triangles owned by center 0).
struct FlowerCensus {
  std::vector<std::int64_t> necklace_triangles;  // per necklace, outermost first
  std::int64_t fill_triangles = 0;
  std::int64_t cap_triangles = 0;
  std::int64_t total() const;
};
FlowerCensus census(const CappedFlower& cf);

// Number of stripes of each maximal trapezoid, outermost first. A maximal
// trapezoid is a run of trapezoids from consecutive necklaces stacked top to
// bottom along collinear diagonals.
std::vector<std::int64_t> stripe_counts(const CappedFlower& cf);
std::vector<std::int64_t> stripe_counts(const std::vector<ColoredNecklace>& flower);

// Fold count of C(a + b alpha) from the necklace nesting alone:
//   2 * (sum of necklace tops above the 1/1 necklace) + 3 + 2 (a + b).
// Exact for arbitrarily large a/b; runs of equal diagonals are summed in closed form.
BigInt layer_fold_count(const PosRational& aspect);

}  // namespace eisenfold
