#include "eisenfold/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "eisenfold/errors.hpp"

namespace eisenfold {

namespace {

constexpr double kSqrt3Half = 0.86602540378443864676;
constexpr double kMargin = 10;

std::int64_t cross(const LatticePoint& x, const LatticePoint& y) { return x.a * y.b - x.b * y.a; }

LatticePoint rotate60(const LatticePoint& p) { return {-p.b, p.a + p.b}; }

// Half-open test for k * p against the union of domains^2 rhombus translates.
bool in_view(const LatticePoint& beta, const LatticePoint& kp, std::int64_t k, int domains) {
  const LatticePoint ab = rotate60(beta);
  const std::int64_t area = cross(beta, ab);
  const std::int64_t s = cross(kp, ab), t = cross(beta, kp);
  const std::int64_t hi = k * domains * area;
  return 0 <= s && s < hi && 0 <= t && t < hi;
}

class Canvas {
 public:
  Canvas(double xmin, double xmax, double ymin, double ymax, double scale)
      : xmin_(xmin), ymax_(ymax), scale_(scale),
        width_((xmax - xmin) * scale + 2 * kMargin), height_((ymax - ymin) * scale + 2 * kMargin) {}

  // Screen coordinates of the lattice point p / k.
  std::string point(const LatticePoint& p, double k = 1) const {
    const double x = (static_cast<double>(p.a) + static_cast<double>(p.b) / 2) / k;
    const double y = static_cast<double>(p.b) * kSqrt3Half / k;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", (x - xmin_) * scale_ + kMargin, (ymax_ - y) * scale_ + kMargin);
    return buf;
  }

  std::string header() const {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.3f\" height=\"%.3f\" "
                  "viewBox=\"0 0 %.3f %.3f\">\n",
                  width_, height_, width_, height_);
    return std::string("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n") + buf;
  }

 private:
  double xmin_, ymax_, scale_, width_, height_;
};

Canvas canvas_for(const std::vector<LatticePoint>& pts, double scale) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : pts) {
    const double x = static_cast<double>(p.a) + static_cast<double>(p.b) / 2;
    const double y = static_cast<double>(p.b) * kSqrt3Half;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  return Canvas(xmin, xmax, ymin, ymax, scale);
}

struct PairLess {
  static bool less(const LatticePoint& x, const LatticePoint& y) { return x.a < y.a || (x.a == y.a && x.b < y.b); }
  bool operator()(const std::pair<LatticePoint, LatticePoint>& x, const std::pair<LatticePoint, LatticePoint>& y) const {
    if (x.first != y.first) return less(x.first, y.first);
    return less(x.second, y.second);
  }
};

const char* fill_of(Color c) { return c == Color::Black ? "#000000" : "#FFFFFF"; }

std::string polygon(const Canvas& cv, const std::array<LatticePoint, 3>& v, const char* fill) {
  return "<polygon points=\"" + cv.point(v[0]) + " " + cv.point(v[1]) + " " + cv.point(v[2]) + "\" fill=\"" + fill +
         "\"/>\n";
}

}  // namespace

bool in_fundamental_rhombus(const LatticePoint& beta, const LatticePoint& m2, std::int64_t multiplier) {
  return in_view(beta, m2, multiplier, 1);
}

std::string render_svg(const RenderSpec& spec) {
  if (spec.domains < 1) throw DomainError("render: domains must be at least 1");
  if (!(spec.scale > 0)) throw DomainError("render: scale must be positive");
  if (spec.beta.a == 0 && spec.beta.b == 0) throw DomainError("render: beta must be nonzero");
  const EisensteinInt big = to_big(spec.beta);
  const auto complex = make_complex(big);
  // Draw in the frame of the canonical beta the complex was built from.
  const LatticePoint beta = complex->beta();

  std::optional<FaceColoring> col;
  switch (spec.content) {
    case RenderSpec::Content::ContinuedFraction:
      if (!is_primitive(big) || beta.a < 1) throw DomainError("render: C(beta) needs a primitive, non-degenerate beta");
      col = continued_fraction_coloring(big);
      break;
    case RenderSpec::Content::Alternating:
      col = alternating_coloring(complex);
      break;
    case RenderSpec::Content::Given:
      if (!spec.coloring) throw DomainError("render: no coloring given");
      if (spec.coloring->complex().beta() != beta) throw DomainError("render: coloring belongs to another complex");
      col = spec.coloring;
      break;
    case RenderSpec::Content::Bare:
      break;
  }

  const LatticePoint ab = rotate60(beta);
  const std::int64_t D = spec.domains;
  const std::vector<LatticePoint> corners{{0, 0}, D * beta, D * ab, D * (beta + ab)};
  std::int64_t amin = 0, amax = 0, bmin = 0, bmax = 0;
  for (const auto& p : corners) {
    amin = std::min(amin, p.a);
    amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b);
    bmax = std::max(bmax, p.b);
  }
  const Canvas cv = canvas_for(corners, spec.scale);

  auto color_of = [&](const PlaneTriangle& t) { return (*col)[complex->project(t).face]; };

  std::ostringstream faces;
  // Fold edges by sorted endpoints, emitted in that order.
  std::set<std::pair<LatticePoint, LatticePoint>, PairLess> seen;
  for (std::int64_t a = amin - 1; a <= amax + 1; ++a)
    for (std::int64_t b = bmin - 1; b <= bmax + 1; ++b)
      for (Orientation o : {Orientation::Up, Orientation::Down}) {
        const PlaneTriangle t{{a, b}, o};
        if (!in_view(beta, t.centroid3(), 3, spec.domains)) continue;
        const auto v = t.vertices();
        faces << polygon(cv, v, col ? fill_of(color_of(t)) : "none");
        if (!col || !spec.show_folds) continue;
        for (int s = 0; s < 3; ++s) {
          if (color_of(t) == color_of(t.neighbor(s))) continue;
          LatticePoint p = v[s], q = v[(s + 1) % 3];
          if (PairLess::less(q, p)) std::swap(p, q);
          seen.insert({p, q});
        }
      }

  std::ostringstream out;
  out << cv.header();
  out << "<title>T(" << beta.a << "+" << beta.b << "alpha)</title>\n";
  out << "<g id=\"faces\" stroke=\"#808080\" stroke-width=\"0.5\">\n" << faces.str() << "</g>\n";
  if (col && spec.show_folds) {
    out << "<g id=\"folds\" stroke=\"#FF0000\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    for (const auto& [p, q] : seen) {
      const LatticePoint m2 = p + q;
      const std::string P = cv.point(p), Q = cv.point(q);
      const auto pc = P.find(','), qc = Q.find(',');
      out << "<line class=\"fold\" data-mid=\"" << m2.a << " " << m2.b << "\" x1=\"" << P.substr(0, pc) << "\" y1=\""
          << P.substr(pc + 1) << "\" x2=\"" << Q.substr(0, qc) << "\" y2=\"" << Q.substr(qc + 1) << "\"/>\n";
    }
    out << "</g>\n";
  }
  if (spec.show_rhombus) {
    out << "<polygon id=\"rhombus\" points=\"" << cv.point({0, 0}) << " " << cv.point(beta) << " "
        << cv.point(beta + ab) << " " << cv.point(ab) << "\" fill=\"none\" stroke=\"#0000FF\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_empty_flower_svg(const PosRational& aspect, double scale) {
  if (!(scale > 0)) throw DomainError("render: scale must be positive");
  const auto flower = empty_flower(aspect);
  std::vector<LatticePoint> pts;
  for (const auto& cn : flower)
    for (const auto& tz : cn.necklace.trapezoids)
      for (const auto& p : tz.ccw_vertices()) pts.push_back(p);
  const Canvas cv = canvas_for(pts, scale);
  std::int64_t amin = 0, amax = 0, bmin = 0, bmax = 0;
  for (const auto& p : pts) {
    amin = std::min(amin, p.a);
    amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b);
    bmax = std::max(bmax, p.b);
  }
  std::ostringstream faces, outlines;
  for (std::int64_t a = amin - 1; a <= amax + 1; ++a)
    for (std::int64_t b = bmin - 1; b <= bmax + 1; ++b)
      for (Orientation o : {Orientation::Up, Orientation::Down}) {
        const PlaneTriangle t{{a, b}, o};
        const LatticePoint c3 = t.centroid3();
        for (const auto& cn : flower) {
          bool hit = false;
          for (const auto& tz : cn.necklace.trapezoids) hit |= tz.contains3(c3);
          if (hit) {
            faces << polygon(cv, t.vertices(), fill_of(cn.color));
            break;
          }
        }
      }
  for (const auto& cn : flower)
    for (const auto& tz : cn.necklace.trapezoids) {
      outlines << "<polygon points=\"";
      const auto v = tz.ccw_vertices();
      for (int i = 0; i < 4; ++i) outlines << (i ? " " : "") << cv.point(v[i]);
      outlines << "\"/>\n";
    }
  std::ostringstream out;
  out << cv.header();
  out << "<g id=\"faces\" stroke=\"#808080\" stroke-width=\"0.5\">\n" << faces.str() << "</g>\n";
  out << "<g id=\"trapezoids\" fill=\"none\" stroke=\"#0000FF\" stroke-width=\"1.5\">\n" << outlines.str() << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace eisenfold
