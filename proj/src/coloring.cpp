#include "eisenfold/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace eisenfold {

namespace {

std::int64_t cross(const LatticePoint& u, const LatticePoint& v) { return u.a * v.b - u.b * v.a; }

// Parity of the permutation (c0, c1, c2, missing) of (0, 1, 2, 3).
bool even_permutation(int c0, int c1, int c2) {
  const int missing = 6 - c0 - c1 - c2;
  const std::array<int, 4> p{c0, c1, c2, missing};
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0;
}

}  // namespace

ComplexPtr make_complex(const EisensteinInt& beta) {
  return std::make_shared<const QuotientComplex>(QuotientComplex::build(beta));
}

FaceColoring::FaceColoring(ComplexPtr complex, std::vector<Color> colors)
    : complex_(std::move(complex)), colors_(std::move(colors)) {
  if (!complex_) throw DomainError("FaceColoring: null complex");
  if (static_cast<int>(colors_.size()) != complex_->face_count())
    throw DomainError("FaceColoring: color count differs from face count");
}

FaceColoring FaceColoring::from_bitstring(ComplexPtr complex, const std::string& bits) {
  std::vector<Color> colors;
  colors.reserve(bits.size());
  for (char ch : bits) {
    if (ch == '0') colors.push_back(Color::Black);
    else if (ch == '1') colors.push_back(Color::White);
    else throw DomainError("FaceColoring: bitstring may only contain '0' and '1'");
  }
  return FaceColoring(std::move(complex), std::move(colors));
}

FaceColoring FaceColoring::uniform(ComplexPtr complex, Color c) {
  const int n = complex->face_count();
  return FaceColoring(std::move(complex), std::vector<Color>(n, c));
}

std::string FaceColoring::bitstring() const {
  std::string s(colors_.size(), '0');
  for (std::size_t i = 0; i < colors_.size(); ++i) s[i] = colors_[i] == Color::Black ? '0' : '1';
  return s;
}

FaceColoring FaceColoring::swapped() const {
  std::vector<Color> c = colors_;
  for (auto& x : c) x = opposite(x);
  return FaceColoring(complex_, std::move(c));
}

FaceColoring alternating_coloring(ComplexPtr c) {
  std::vector<Color> colors;
  colors.reserve(c->face_count());
  for (const auto& t : c->faces()) colors.push_back(t.orientation == Orientation::Up ? Color::Black : Color::White);
  for (int f = 0; f < c->face_count(); ++f) {
    for (int s = 0; s < 3; ++s) {
      if (colors[f] == colors[c->glued({f, s}).face])
        throw InternalError("alternating_coloring: dual graph is not bipartite");
    }
  }
  return FaceColoring(std::move(c), std::move(colors));
}

FaceColoring continued_fraction_coloring(const EisensteinInt& beta) {
  const CappedFlower flower = CappedFlower::build(beta);
  return continued_fraction_coloring(make_complex(beta), flower);
}

FaceColoring continued_fraction_coloring(ComplexPtr c, const CappedFlower& flower) {
  if (!(c->beta() == flower.beta())) throw DomainError("continued_fraction_coloring: flower built for another beta");
  std::vector<Color> colors;
  colors.reserve(c->face_count());
  for (const auto& t : c->faces()) colors.push_back(flower.color_at(t));
  return FaceColoring(std::move(c), std::move(colors));
}

GoodnessReport is_good(const FaceColoring& col) {
  GoodnessReport r;
  const auto& vs = col.complex().vertices();
  for (int v = 0; v < static_cast<int>(vs.size()); ++v) {
    int black = 0;
    for (const Corner& k : vs[v].star) black += col[k.face] == Color::Black;
    const int diff = 2 * black - vs[v].degree;  // black - white
    if (diff % 3 != 0) {
      r.good = false;
      r.violations.push_back(v);
    }
    if (diff % 6 != 0) r.mod6 = false;
  }
  return r;
}

std::int64_t fold_count(const FaceColoring& col) {
  const auto& pairing = col.complex().pairing();
  std::int64_t folds = 0;
  for (int f = 0; f < col.face_count(); ++f) {
    for (int s = 0; s < 3; ++s) {
      const SideRef o = pairing[f][s];
      if (SideRef{f, s} < o && col[f] != col[o.face]) ++folds;
    }
  }
  return folds;
}

Balance color_balance(const FaceColoring& col) {
  Balance b;
  for (Color c : col.colors()) (c == Color::Black ? b.black : b.white) += 1;
  return b;
}

BigRational eta(const BigInt& folds, const BigInt& faces) {
  if (faces <= 0) throw DomainError("eta: face count must be positive");
  BigRational r(folds * folds, faces);
  r.canonicalize();
  return r;
}

BigRational eta(const FaceColoring& col) {
  return eta(BigInt(static_cast<long>(fold_count(col))), BigInt(col.face_count()));
}

std::vector<int> vertex_four_coloring(const FaceColoring& col, int base, int base_color) {
  const QuotientComplex& c = col.complex();
  if (base < 0 || base >= c.vertex_count()) throw DomainError("vertex_four_coloring: base vertex out of range");
  if (base_color < 0 || base_color > 3) throw DomainError("vertex_four_coloring: base color must be 0..3");
  const auto& fv = c.face_vertices();
  std::vector<int> vc(c.vertex_count(), -1);
  std::vector<char> seen(c.face_count(), 0);

  const int f0 = c.vertices()[base].star.front().face;
  vc[base] = base_color;
  // Seed: smallest colors for the other two corners consistent with the face color.
  {
    const auto& v = fv[f0];
    const int k = static_cast<int>(std::find(v.begin(), v.end(), base) - v.begin());
    const int v1 = v[(k + 1) % 3], v2 = v[(k + 2) % 3];
    if (v1 == base || v2 == base || v1 == v2) throw DomainError("vertex_four_coloring: face with repeated vertex");
    bool done = false;
    for (int c1 = 0; c1 < 4 && !done; ++c1) {
      for (int c2 = 0; c2 < 4 && !done; ++c2) {
        if (c1 == base_color || c2 == base_color || c1 == c2) continue;
        std::array<int, 3> cols{};
        cols[k] = base_color;
        cols[(k + 1) % 3] = c1;
        cols[(k + 2) % 3] = c2;
        if (even_permutation(cols[0], cols[1], cols[2]) == (col[f0] == Color::Black)) {
          vc[v1] = c1;
          vc[v2] = c2;
          done = true;
        }
      }
    }
  }

  std::deque<int> queue{f0};
  seen[f0] = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    const auto& v = fv[f];
    int unknown = -1, known = 0;
    for (int k = 0; k < 3; ++k) {
      if (vc[v[k]] >= 0) ++known;
      else unknown = k;
    }
    if (known < 2) throw InternalError("vertex_four_coloring: propagation reached a face through a vertex");
    if (known == 2) {
      const int a = vc[v[(unknown + 1) % 3]], b = vc[v[(unknown + 2) % 3]];
      for (int x = 0; x < 4; ++x) {
        if (x == a || x == b) continue;
        std::array<int, 3> cols{};
        cols[unknown] = x;
        cols[(unknown + 1) % 3] = a;
        cols[(unknown + 2) % 3] = b;
        if (even_permutation(cols[0], cols[1], cols[2]) == (col[f] == Color::Black)) {
          vc[v[unknown]] = x;
          break;
        }
      }
    }
    for (int s = 0; s < 3; ++s) {
      const int g = c.glued({f, s}).face;
      if (!seen[g]) {
        seen[g] = 1;
        queue.push_back(g);
      }
    }
  }

  // Verification: proper on every face with the prescribed orientation.
  for (int f = 0; f < c.face_count(); ++f) {
    const int a = vc[fv[f][0]], b = vc[fv[f][1]], d = vc[fv[f][2]];
    if (a < 0 || b < 0 || d < 0) throw InternalError("vertex_four_coloring: unreached vertex");
    if (a == b || b == d || a == d || even_permutation(a, b, d) != (col[f] == Color::Black))
      throw DomainError("vertex_four_coloring: coloring is not good");
  }
  return vc;
}

FaceColoring induced_face_coloring(ComplexPtr c, const std::vector<int>& vertex_colors) {
  if (static_cast<int>(vertex_colors.size()) != c->vertex_count())
    throw DomainError("induced_face_coloring: wrong number of vertex colors");
  std::vector<Color> colors;
  colors.reserve(c->face_count());
  for (const auto& v : c->face_vertices()) {
    const int a = vertex_colors[v[0]], b = vertex_colors[v[1]], d = vertex_colors[v[2]];
    for (int x : {a, b, d})
      if (x < 0 || x > 3) throw DomainError("induced_face_coloring: colors must be 0..3");
    if (a == b || b == d || a == d) throw DomainError("induced_face_coloring: vertex coloring is not proper");
    colors.push_back(even_permutation(a, b, d) ? Color::Black : Color::White);
  }
  return FaceColoring(std::move(c), std::move(colors));
}

std::vector<MonochromeRegion> monochrome_regions(const FaceColoring& col) {
  if (!is_good(col).good) throw DomainError("monochrome_regions: coloring is not good");
  const QuotientComplex& c = col.complex();
  std::vector<int> region_of(c.face_count(), -1);
  std::vector<MonochromeRegion> out;

  for (int start = 0; start < c.face_count(); ++start) {
    if (region_of[start] >= 0) continue;
    const int rid = static_cast<int>(out.size());
    MonochromeRegion reg;
    reg.color = col[start];
    // Develop the region into the plane, one planar triangle per face.
    std::map<int, PlaneTriangle> placed;
    std::set<PlaneTriangle> occupied;
    std::deque<int> queue{start};
    placed.emplace(start, c.lift(start));
    occupied.insert(c.lift(start));
    region_of[start] = rid;
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      reg.faces.push_back(f);
      const PlaneTriangle t = placed.at(f);
      for (int s = 0; s < 3; ++s) {
        const PlaneTriangle n = t.neighbor(s);
        const int g = c.project(n).face;
        if (col[g] != reg.color) {
          ++reg.boundary_length;
          continue;
        }
        auto it = placed.find(g);
        if (it != placed.end()) {
          if (!(it->second == n)) throw DomainError("monochrome_regions: region does not develop isometrically");
          continue;
        }
        placed.emplace(g, n);
        occupied.insert(n);
        region_of[g] = rid;
        queue.push_back(g);
      }
    }
    std::sort(reg.faces.begin(), reg.faces.end());

    // Boundary of the developed union, as a single counterclockwise cycle.
    std::map<LatticePoint, LatticePoint> next;
    std::int64_t boundary_edges = 0;
    for (const PlaneTriangle& t : occupied) {
      const auto v = t.vertices();
      for (int s = 0; s < 3; ++s) {
        if (occupied.count(t.neighbor(s))) continue;
        if (!next.emplace(v[s], v[(s + 1) % 3]).second)
          throw DomainError("monochrome_regions: developed region is not a disk");
        ++boundary_edges;
      }
    }
    if (boundary_edges != reg.boundary_length) throw InternalError("monochrome_regions: boundary mismatch");
    std::vector<LatticePoint> cycle;
    const LatticePoint first = next.begin()->first;
    LatticePoint p = first;
    do {
      cycle.push_back(p);
      p = next.at(p);
      if (static_cast<std::int64_t>(cycle.size()) > boundary_edges)
        throw InternalError("monochrome_regions: boundary does not close");
    } while (!(p == first));
    if (static_cast<std::int64_t>(cycle.size()) != boundary_edges)
      throw DomainError("monochrome_regions: region has more than one boundary component");

    // Corners: drop collinear points; convexity means every turn is to the left.
    const std::size_t n = cycle.size();
    std::int64_t twice_area = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const LatticePoint& prev = cycle[(i + n - 1) % n];
      const LatticePoint& cur = cycle[i];
      const LatticePoint& nxt = cycle[(i + 1) % n];
      const std::int64_t turn = cross(cur - prev, nxt - cur);
      if (turn < 0) throw DomainError("monochrome_regions: region is not convex");
      if (turn > 0) reg.lifted_polygon.push_back(cur);
      twice_area += cross(cur, nxt);
    }
    if (twice_area != static_cast<std::int64_t>(reg.faces.size()))
      throw InternalError("monochrome_regions: developed area differs from the face count");
    std::rotate(reg.lifted_polygon.begin(),
                std::min_element(reg.lifted_polygon.begin(), reg.lifted_polygon.end()), reg.lifted_polygon.end());
    out.push_back(std::move(reg));
  }
  return out;
}

std::int64_t SpecialHexagon::perimeter() const {
  std::int64_t p = 0;
  for (auto x : l) p += x;
  return p;
}

std::int64_t SpecialHexagon::triangle_count() const {
  if (!closes()) throw DomainError("SpecialHexagon: sides do not close up");
  for (auto x : l)
    if (x < 0) throw DomainError("SpecialHexagon: negative side length");
  const std::int64_t big = l[0] + l[1] + l[5];
  return big * big - l[1] * l[1] - l[3] * l[3] - l[5] * l[5];
}

std::array<LatticePoint, 6> SpecialHexagon::vertices() const {
  std::array<LatticePoint, 6> v{};
  LatticePoint p{0, 0};
  for (int k = 0; k < 6; ++k) {
    v[k] = p;
    p += l[k] * kOne.rotated(k);
  }
  if (!p.is_zero()) throw DomainError("SpecialHexagon: sides do not close up");
  return v;
}

std::int64_t SpecialHexagon::shoelace_triangle_count() const {
  const auto v = vertices();
  std::int64_t s = 0;
  for (int k = 0; k < 6; ++k) s += cross(v[k], v[(k + 1) % 6]);
  return s;
}

double special_hexagon_area(const SpecialHexagon& h) {
  const std::int64_t t = h.triangle_count();
  if (t != h.shoelace_triangle_count()) throw InternalError("special_hexagon_area: corner cutting disagrees with shoelace");
  return std::sqrt(3.0) / 4.0 * static_cast<double>(t);
}

IsoperimetricReport region_isoperimetric_check(const FaceColoring& col) {
  IsoperimetricReport r;
  const auto regions = monochrome_regions(col);
  std::int64_t sum_f = 0, sum_F = 0;
  BigInt sum_f2 = 0;
  r.regions_bound = true;
  for (const auto& reg : regions) {
    if (reg.color != Color::White) continue;
    RegionRatio rr;
    rr.perimeter = reg.boundary_length;
    rr.triangles = static_cast<std::int64_t>(reg.faces.size());
    rr.ratio = eta(BigInt(static_cast<long>(rr.perimeter)), BigInt(static_cast<long>(rr.triangles)));
    if (rr.ratio < 6) r.regions_bound = false;
    if (r.minimizing_region < 0 || rr.ratio < r.min_ratio) {
      r.minimizing_region = static_cast<int>(r.white_regions.size());
      r.min_ratio = rr.ratio;
    }
    sum_f += rr.perimeter;
    sum_F += rr.triangles;
    sum_f2 += BigInt(static_cast<long>(rr.perimeter)) * rr.perimeter;
    r.white_regions.push_back(std::move(rr));
  }
  const std::int64_t f = fold_count(col);
  const std::int64_t F = col.face_count();
  r.folds_add_up = f == sum_f;
  r.faces_add_up = 2 * sum_F == F;
  r.eta = eta(BigInt(static_cast<long>(f)), BigInt(static_cast<long>(F)));
  r.two_eta = 2 * r.eta;
  if (sum_F > 0) {
    r.farey_sum = BigRational(sum_f2, BigInt(static_cast<long>(sum_F)));
    r.farey_sum.canonicalize();
  }
  r.chain_holds = sum_F > 0 && r.two_eta >= r.farey_sum && r.farey_sum >= r.min_ratio && r.min_ratio >= 6;
  return r;
}

}  // namespace eisenfold
