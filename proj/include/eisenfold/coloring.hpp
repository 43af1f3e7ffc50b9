#pragma once

// Face 2-colorings of T(beta): construction, goodness, folds, the induced
// vertex 4-coloring and the geometry of monochrome regions.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eisenfold/complex.hpp"
#include "eisenfold/flower.hpp"

namespace eisenfold {

using ComplexPtr = std::shared_ptr<const QuotientComplex>;

ComplexPtr make_complex(const EisensteinInt& beta);

class FaceColoring {
 public:
  FaceColoring(ComplexPtr complex, std::vector<Color> colors);
  // One character per face in face order: '0' Black, '1' White.
  static FaceColoring from_bitstring(ComplexPtr complex, const std::string& bits);
  static FaceColoring uniform(ComplexPtr complex, Color c);

  const QuotientComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const std::vector<Color>& colors() const { return colors_; }
  Color operator[](int face) const { return colors_[face]; }
  int face_count() const { return static_cast<int>(colors_.size()); }

  std::string bitstring() const;
  FaceColoring swapped() const;

  friend bool operator==(const FaceColoring& x, const FaceColoring& y) { return x.colors_ == y.colors_; }

 private:
  ComplexPtr complex_;
  std::vector<Color> colors_;
};

// Up faces Black, Down faces White.
FaceColoring alternating_coloring(ComplexPtr c);

// C(beta): the quotient of the planar capped-flower coloring.
FaceColoring continued_fraction_coloring(const EisensteinInt& beta);
FaceColoring continued_fraction_coloring(ComplexPtr c, const CappedFlower& flower);

struct GoodnessReport {
  bool good = true;
  bool mod6 = true;  // black and white counts congruent mod 6 at every vertex
  std::vector<int> violations;
};
GoodnessReport is_good(const FaceColoring& col);

// Edges (pairing orbits) whose two sides carry different colors.
std::int64_t fold_count(const FaceColoring& col);

struct Balance {
  std::int64_t black = 0;
  std::int64_t white = 0;
};
Balance color_balance(const FaceColoring& col);

// f^2 / F.
BigRational eta(const FaceColoring& col);
BigRational eta(const BigInt& folds, const BigInt& faces);

// Proper vertex coloring with colors 0..3 such that each Black face reads an
// even permutation (c0, c1, c2, missing) counterclockwise, each White face an
// odd one. Throws DomainError if the coloring is not good.
std::vector<int> vertex_four_coloring(const FaceColoring& col, int base = 0, int base_color = 0);

// The face coloring a proper vertex 4-coloring induces (inverse of the above).
FaceColoring induced_face_coloring(ComplexPtr c, const std::vector<int>& vertex_colors);

struct MonochromeRegion {
  Color color = Color::Black;
  std::vector<int> faces;
  std::int64_t boundary_length = 0;
  // Corners of the developed convex lattice polygon, counterclockwise,
  // starting from the smallest (a, b).
  std::vector<LatticePoint> lifted_polygon;
};

// Requires a good coloring; throws DomainError if a region fails to develop
// into a convex Eisenstein polygon.
std::vector<MonochromeRegion> monochrome_regions(const FaceColoring& col);

// Convex hexagon with all angles 120 degrees; sides run counterclockwise, side
// k in direction alpha^(k-1). Lengths may be zero (triangles, trapezoids, ...).
struct SpecialHexagon {
  std::array<std::int64_t, 6> l{};

  bool closes() const { return l[0] + l[1] == l[3] + l[4] && l[1] + l[2] == l[4] + l[5]; }
  std::int64_t perimeter() const;
  // Area in unit triangles, by cutting the three corner triangles from the
  // big triangle: (l1+l2+l6)^2 - l2^2 - l4^2 - l6^2.
  std::int64_t triangle_count() const;
  // Twice the shoelace area of the developed vertex chain, in units of the
  // fundamental parallelogram; equals triangle_count().
  std::int64_t shoelace_triangle_count() const;
  std::array<LatticePoint, 6> vertices() const;
};

double special_hexagon_area(const SpecialHexagon& h);

struct RegionRatio {
  std::int64_t perimeter = 0;  // f_j
  std::int64_t triangles = 0;  // F_j
  BigRational ratio;           // f_j^2 / F_j
};

struct IsoperimetricReport {
  std::vector<RegionRatio> white_regions;
  int minimizing_region = -1;
  BigRational min_ratio;
  BigRational farey_sum;  // sum f_j^2 / sum F_j
  BigRational two_eta;    // 2 f^2 / F
  BigRational eta;
  bool folds_add_up = false;      // f == sum f_j
  bool faces_add_up = false;      // F / 2 == sum F_j
  bool regions_bound = false;     // every ratio >= 6
  bool chain_holds = false;       // 2 eta >= farey_sum >= min_ratio >= 6
  bool ok() const { return folds_add_up && faces_add_up && regions_bound && chain_holds && eta >= 3; }
};
IsoperimetricReport region_isoperimetric_check(const FaceColoring& col);

}  // namespace eisenfold
