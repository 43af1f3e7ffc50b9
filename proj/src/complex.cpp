#include "eisenfold/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace eisenfold {

namespace {

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t n, std::int64_t d) { return n - d * floor_div(n, d); }

// Returns g = gcd(x, y) >= 0 with s*x + t*y = g.
std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (y != 0) {
    const std::int64_t q = floor_div(x, y);
    std::tie(x, y) = std::make_pair(y, x - q * y);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (x < 0) {
    x = -x;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return x;
}

LatticePoint rotate_w(const LatticePoint& p) { return p.rotated(2); }

PlaneTriangle rotate_w(const PlaneTriangle& t) { return PlaneTriangle::from_centroid3(t.centroid3().rotated(2)); }

}  // namespace

std::array<LatticePoint, 3> PlaneTriangle::vertices() const {
  if (orientation == Orientation::Up) return {anchor, anchor + kOne, anchor + kAlpha};
  return {anchor + kOne, anchor + kOne + kAlpha, anchor + kAlpha};
}

LatticePoint PlaneTriangle::centroid3() const {
  const std::int64_t off = orientation == Orientation::Up ? 1 : 2;
  return {3 * anchor.a + off, 3 * anchor.b + off};
}

PlaneTriangle PlaneTriangle::from_centroid3(const LatticePoint& c3) {
  const std::int64_t ra = floor_mod(c3.a, 3), rb = floor_mod(c3.b, 3);
  if (ra == 1 && rb == 1) return {{(c3.a - 1) / 3, (c3.b - 1) / 3}, Orientation::Up};
  if (ra == 2 && rb == 2) return {{(c3.a - 2) / 3, (c3.b - 2) / 3}, Orientation::Down};
  throw InternalError("from_centroid3: not the centroid of a unit triangle");
}

PlaneTriangle PlaneTriangle::from_vertices(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r) {
  return from_centroid3(p + q + r);
}

PlaneTriangle PlaneTriangle::neighbor(int side) const {
  const auto v = vertices();
  const LatticePoint& p = v[side];
  const LatticePoint& q = v[(side + 1) % 3];
  const LatticePoint& o = v[(side + 2) % 3];
  return from_vertices(p, q, p + q - o);
}

PlaneTriangle Motion::apply(const PlaneTriangle& t) const {
  return PlaneTriangle::from_centroid3(t.centroid3().rotated(2 * rot) + 3 * shift);
}

LatticeReducer::LatticeReducer(const LatticePoint& delta) {
  const LatticePoint u = delta;
  const LatticePoint v = delta.times_alpha();
  std::int64_t s = 0, t = 0;
  h_ = ext_gcd(u.b, v.b, s, t);
  if (h_ == 0) throw DomainError("LatticeReducer: degenerate lattice");
  row_ = s * u + t * v;
  g_ = delta.norm() / h_;
  row_.a = floor_mod(row_.a, g_);
}

LatticePoint LatticeReducer::reduce(const LatticePoint& p) const {
  const std::int64_t k = floor_div(p.b, h_);
  LatticePoint r = p - k * row_;
  r.a = floor_mod(r.a, g_);
  return r;
}

QuotientComplex::QuotientComplex(const LatticePoint& beta, const LatticePoint& delta)
    : beta_(beta), delta_(delta), reducer_(delta) {}

QuotientComplex QuotientComplex::build(const EisensteinInt& beta_in) {
  if (beta_in.is_zero()) throw DomainError("build_complex: beta must be nonzero");
  const EisensteinInt canon = canonicalize(beta_in);
  if (canon.norm() > kMaxNorm) throw DomainError("build_complex: norm(beta) too large for explicit construction");
  const LatticePoint beta = to_lattice(canon);
  const LatticePoint delta = LatticePoint{2, -1} * beta;  // (1 - alpha^2) beta
  QuotientComplex c(beta, delta);
  const LatticeReducer& red = c.reducer_;
  const std::int64_t norm = beta.norm();
  const std::int64_t cells = red.cell_count();
  if (cells != 3 * norm) throw InternalError("build_complex: translation lattice has wrong covolume");

  auto reduced = [&](const PlaneTriangle& t) { return PlaneTriangle{red.reduce(t.anchor), t.orientation}; };
  auto tri_index = [&](const PlaneTriangle& t) {
    return 2 * red.index(t.anchor) + static_cast<std::int64_t>(t.orientation);
  };

  // Faces: rotation orbits of torus triangles, represented by their minimum.
  const std::int64_t torus_tris = 2 * cells;
  std::vector<std::int64_t> rep_of(torus_tris, -1);
  c.torus_rot_.assign(torus_tris, 0);
  std::vector<PlaneTriangle> reps;
  for (std::int64_t a = 0; a < red.g(); ++a) {
    for (std::int64_t b = 0; b < red.h(); ++b) {
      for (Orientation o : {Orientation::Up, Orientation::Down}) {
        const PlaneTriangle t0{{a, b}, o};
        const std::int64_t i0 = tri_index(t0);
        if (rep_of[i0] >= 0) continue;
        std::array<PlaneTriangle, 3> orbit{t0, reduced(rotate_w(t0)), PlaneTriangle{}};
        orbit[2] = reduced(rotate_w(orbit[1]));
        if (orbit[1] == t0 || !(reduced(rotate_w(orbit[2])) == t0))
          throw InternalError("build_complex: a face is fixed by the rotation");
        const int best = static_cast<int>(std::min_element(orbit.begin(), orbit.end()) - orbit.begin());
        const std::int64_t rep_index = tri_index(orbit[best]);
        for (int j = 0; j < 3; ++j) {
          const std::int64_t ij = tri_index(orbit[j]);
          rep_of[ij] = rep_index;
          c.torus_rot_[ij] = static_cast<std::int8_t>(((best - j) % 3 + 3) % 3);
        }
        reps.push_back(orbit[best]);
      }
    }
  }
  std::sort(reps.begin(), reps.end());
  c.faces_ = reps;
  std::vector<std::int32_t> face_of_rep(torus_tris, -1);
  for (std::size_t f = 0; f < reps.size(); ++f) face_of_rep[tri_index(reps[f])] = static_cast<std::int32_t>(f);
  c.torus_face_.resize(torus_tris);
  for (std::int64_t i = 0; i < torus_tris; ++i) c.torus_face_[i] = face_of_rep[rep_of[i]];

  // Vertices: rotation orbits of torus points.
  c.torus_vertex_.assign(cells, -1);
  std::vector<LatticePoint> vreps;
  std::vector<std::int64_t> vrep_of(cells, -1);
  for (std::int64_t a = 0; a < red.g(); ++a) {
    for (std::int64_t b = 0; b < red.h(); ++b) {
      const LatticePoint p0{a, b};
      const std::int64_t i0 = red.index(p0);
      if (vrep_of[i0] >= 0) continue;
      const LatticePoint p1 = red.reduce(rotate_w(p0));
      const LatticePoint p2 = red.reduce(rotate_w(p1));
      const LatticePoint best = std::min({p0, p1, p2});
      for (const LatticePoint& p : {p0, p1, p2}) vrep_of[red.index(p)] = red.index(best);
      vreps.push_back(best);
    }
  }
  std::sort(vreps.begin(), vreps.end());
  std::vector<std::int32_t> vertex_of_rep(cells, -1);
  c.vertices_.resize(vreps.size());
  for (std::size_t v = 0; v < vreps.size(); ++v) {
    vertex_of_rep[red.index(vreps[v])] = static_cast<std::int32_t>(v);
    c.vertices_[v].representative = vreps[v];
  }
  for (std::int64_t i = 0; i < cells; ++i) c.torus_vertex_[i] = vertex_of_rep[vrep_of[i]];

  const int F = c.face_count();
  if (F != 2 * norm) throw InternalError("build_complex: face count differs from 2 norm(beta)");
  if (c.vertex_count() != norm + 2) throw InternalError("build_complex: vertex count differs from norm(beta) + 2");

  c.face_vertices_.resize(F);
  for (int f = 0; f < F; ++f) {
    const auto vs = c.faces_[f].vertices();
    for (int k = 0; k < 3; ++k) {
      const int v = c.project_vertex(vs[k]);
      c.face_vertices_[f][k] = v;
      ++c.vertices_[v].degree;
    }
  }

  // Stars: planar triangles around the representative point, counterclockwise.
  for (auto& vo : c.vertices_) {
    const LatticePoint p = vo.representative;
    for (int j = 0; j < vo.degree; ++j) {
      const PlaneTriangle t =
          PlaneTriangle::from_vertices(p, p + kOne.rotated(j), p + kOne.rotated(j + 1));
      const Projection pr = c.project(t);
      const LatticePoint q = pr.motion.apply(p);
      const auto vs = c.faces_[pr.face].vertices();
      const int corner = static_cast<int>(std::find(vs.begin(), vs.end(), q) - vs.begin());
      if (corner == 3) throw InternalError("build_complex: star corner not found");
      vo.star.push_back({pr.face, corner});
    }
  }

  // Edge pairing from planar adjacency.
  c.pairing_.resize(F);
  for (int f = 0; f < F; ++f) {
    const PlaneTriangle& t = c.faces_[f];
    const auto vs = t.vertices();
    for (int s = 0; s < 3; ++s) {
      const Projection pr = c.project(t.neighbor(s));
      const LatticePoint p = pr.motion.apply(vs[s]);
      const LatticePoint q = pr.motion.apply(vs[(s + 1) % 3]);
      const auto ws = c.faces_[pr.face].vertices();
      int match = -1;
      for (int s2 = 0; s2 < 3; ++s2) {
        if (ws[s2] == q && ws[(s2 + 1) % 3] == p) match = s2;
      }
      if (match < 0) throw InternalError("build_complex: glued side not found");
      c.pairing_[f][s] = {pr.face, match};
    }
  }
  for (int f = 0; f < F; ++f) {
    for (int s = 0; s < 3; ++s) {
      const SideRef other = c.pairing_[f][s];
      if (other == SideRef{f, s} || !(c.glued(other) == SideRef{f, s}))
        throw InternalError("build_complex: edge pairing is not a fixed-point-free involution");
    }
  }

  int twos = 0, curvature = 0;
  for (const auto& vo : c.vertices_) {
    if (vo.degree != 2 && vo.degree != 6) throw InternalError("build_complex: unexpected vertex degree");
    twos += vo.degree == 2;
    curvature += 6 - vo.degree;
  }
  if (twos != 3 || curvature != 12) throw InternalError("build_complex: defect list is not {2,2,2}");
  return c;
}

Projection QuotientComplex::project(const PlaneTriangle& t) const {
  const LatticePoint red_anchor = reducer_.reduce(t.anchor);
  const LatticePoint s1 = red_anchor - t.anchor;
  const std::int64_t idx = 2 * reducer_.index(red_anchor) + static_cast<std::int64_t>(t.orientation);
  const int face = torus_face_[idx];
  const int k = torus_rot_[idx];
  Motion m{k, s1.rotated(2 * k)};
  const PlaneTriangle u = m.apply(t);
  m.shift += faces_[face].anchor - u.anchor;
  return {face, m};
}

int QuotientComplex::project_vertex(const LatticePoint& p) const {
  return torus_vertex_[reducer_.index(reducer_.reduce(p))];
}

std::vector<int> QuotientComplex::degree_sequence() const {
  std::vector<int> d;
  d.reserve(vertices_.size());
  for (const auto& v : vertices_) d.push_back(v.degree);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace eisenfold
