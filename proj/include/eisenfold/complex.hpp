#pragma once

// The sphere triangulation T(beta): the planar equilateral triangulation modulo
// the group G_beta generated by order-3 rotations about the points of beta*E.
//
// G_beta = { z -> w^k z + t : t in delta*E } with w = alpha^2 and
// delta = (1 - alpha^2) beta. Faces of T(beta) are the rotation orbits of the
// unit triangles of the torus C / delta*E; the three rotation fixed points of
// the torus become the three degree-2 vertices.

#include <array>
#include <cstdint>
#include <vector>

#include "eisenfold/eisenstein.hpp"

namespace eisenfold {

enum class Orientation : std::uint8_t { Up = 0, Down = 1 };

// Up(anchor) has vertices anchor, anchor+1, anchor+alpha.
// Down(anchor) has vertices anchor+1, anchor+1+alpha, anchor+alpha.
// Vertices are listed counterclockwise; side s joins vertex s to vertex s+1.
struct PlaneTriangle {
  LatticePoint anchor;
  Orientation orientation = Orientation::Up;

  std::array<LatticePoint, 3> vertices() const;
  // Three times the centroid; congruent to (1,1) mod 3 for Up, (2,2) for Down.
  LatticePoint centroid3() const;
  static PlaneTriangle from_centroid3(const LatticePoint& c3);
  static PlaneTriangle from_vertices(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r);
  PlaneTriangle neighbor(int side) const;

  friend bool operator==(const PlaneTriangle& x, const PlaneTriangle& y) {
    return x.anchor == y.anchor && x.orientation == y.orientation;
  }
  friend bool operator<(const PlaneTriangle& x, const PlaneTriangle& y) {
    if (x.anchor.a != y.anchor.a) return x.anchor.a < y.anchor.a;
    if (x.anchor.b != y.anchor.b) return x.anchor.b < y.anchor.b;
    return x.orientation < y.orientation;
  }
};

// Element p -> w^rot p + shift of G_beta (w = alpha^2).
struct Motion {
  int rot = 0;
  LatticePoint shift;

  LatticePoint apply(const LatticePoint& p) const { return p.rotated(2 * rot) + shift; }
  PlaneTriangle apply(const PlaneTriangle& t) const;
};

// Canonical reduction modulo the principal lattice delta*E, using its Hermite
// basis {(g, 0), (s, h)}: representatives satisfy 0 <= a < g and 0 <= b < h.
class LatticeReducer {
 public:
  explicit LatticeReducer(const LatticePoint& delta);

  LatticePoint reduce(const LatticePoint& p) const;
  std::int64_t index(const LatticePoint& reduced) const { return reduced.a * h_ + reduced.b; }
  std::int64_t cell_count() const { return g_ * h_; }
  std::int64_t g() const { return g_; }
  std::int64_t h() const { return h_; }

 private:
  std::int64_t g_ = 0, h_ = 0;
  LatticePoint row_;  // lattice vector (s, h)
};

struct SideRef {
  int face = -1;
  int side = -1;
  friend bool operator==(const SideRef& x, const SideRef& y) { return x.face == y.face && x.side == y.side; }
  friend bool operator<(const SideRef& x, const SideRef& y) {
    return x.face < y.face || (x.face == y.face && x.side < y.side);
  }
};

struct Corner {
  int face = -1;
  int corner = -1;  // 0..2, index into the face's vertex list
};

struct VertexOrbit {
  LatticePoint representative;
  int degree = 0;
  std::vector<Corner> star;  // counterclockwise, length == degree
};

struct Projection {
  int face = -1;
  Motion motion;  // motion maps the projected triangle onto lift(face)
};

class QuotientComplex {
 public:
  // Largest supported norm(beta); bigger complexes do not fit in memory anyway.
  static constexpr std::int64_t kMaxNorm = std::int64_t{1} << 24;

  // Canonicalizes beta first. Primitivity is not required.
  static QuotientComplex build(const EisensteinInt& beta);

  const LatticePoint& beta() const { return beta_; }
  const LatticePoint& delta() const { return delta_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return 3 * face_count() / 2; }

  const std::vector<PlaneTriangle>& faces() const { return faces_; }
  const PlaneTriangle& lift(int face) const { return faces_.at(face); }
  const std::vector<std::array<SideRef, 3>>& pairing() const { return pairing_; }
  SideRef glued(SideRef s) const { return pairing_[s.face][s.side]; }
  const std::vector<std::array<int, 3>>& face_vertices() const { return face_vertices_; }
  const std::vector<VertexOrbit>& vertices() const { return vertices_; }

  Projection project(const PlaneTriangle& t) const;
  int project_vertex(const LatticePoint& p) const;

  std::vector<int> degree_sequence() const;

 private:
  QuotientComplex(const LatticePoint& beta, const LatticePoint& delta);

  LatticePoint beta_, delta_;
  LatticeReducer reducer_;
  std::vector<PlaneTriangle> faces_;
  std::vector<std::array<SideRef, 3>> pairing_;
  std::vector<std::array<int, 3>> face_vertices_;
  std::vector<VertexOrbit> vertices_;
  // Per torus triangle (2 * cell index + orientation): quotient face and the
  // rotation count that carries it onto the face's representative.
  std::vector<std::int32_t> torus_face_;
  std::vector<std::int8_t> torus_rot_;
  std::vector<std::int32_t> torus_vertex_;
};

}  // namespace eisenfold
