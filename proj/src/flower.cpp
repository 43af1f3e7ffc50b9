#include "eisenfold/flower.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace eisenfold {

namespace {

std::int64_t cross(const LatticePoint& u, const LatticePoint& v) { return u.a * v.b - u.b * v.a; }

// Length of a segment lying on a line of the triangulation; 0 if it does not.
std::int64_t lattice_length(const LatticePoint& p, const LatticePoint& q) {
  const LatticePoint d = q - p;
  if (d.a == 0) return std::llabs(d.b);
  if (d.b == 0) return std::llabs(d.a);
  if (d.a == -d.b) return std::llabs(d.a);
  return 0;
}

LatticePoint divide_exact(const LatticePoint& p, std::int64_t k) {
  if (k == 0 || p.a % k != 0 || p.b % k != 0) throw InternalError("necklace_gamma: inexact unit direction");
  return {p.a / k, p.b / k};
}

bool same_segment(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r, const LatticePoint& s) {
  return (p == r && q == s) || (p == s && q == r);
}

Trapezoid rotate_about(const Trapezoid& t, const LatticePoint& c, int k) {
  auto rot = [&](const LatticePoint& p) { return c + (p - c).rotated(k); };
  Trapezoid r = t;
  r.hinge = rot(t.hinge);
  r.tip = rot(t.tip);
  r.hinge_foot = rot(t.hinge_foot);
  r.tip_foot = rot(t.tip_foot);
  return r;
}

std::array<std::pair<LatticePoint, LatticePoint>, 4> sides(const Trapezoid& t) {
  return {{{t.hinge, t.tip}, {t.tip, t.tip_foot}, {t.tip_foot, t.hinge_foot}, {t.hinge_foot, t.hinge}}};
}

bool is_side_of(const Necklace& x, int trapezoid, const LatticePoint& p, const LatticePoint& q) {
  for (const auto& [u, v] : sides(x.trapezoids[trapezoid])) {
    if (same_segment(u, v, p, q)) return true;
  }
  return false;
}

Necklace necklace_from(const Trapezoid& first, const LatticePoint& center) {
  Necklace n;
  n.center = center;
  n.diag = first.diag;
  n.top = first.top;
  n.chirality = first.chirality;
  for (int k = 0; k < 6; ++k) n.trapezoids[k] = rotate_about(first, center, k);
  return n;
}

std::int64_t to_i64(const BigInt& v) {
  if (!v.fits_slong_p()) throw DomainError("value does not fit in 64 bits");
  return v.get_si();
}

}  // namespace

std::array<LatticePoint, 4> Trapezoid::ccw_vertices() const {
  if (chirality > 0) return {tip, hinge, hinge_foot, tip_foot};
  return {hinge, tip, tip_foot, hinge_foot};
}

bool Trapezoid::contains3(const LatticePoint& p3) const {
  const auto v = ccw_vertices();
  for (int i = 0; i < 4; ++i) {
    const LatticePoint& u = v[i];
    const LatticePoint& w = v[(i + 1) % 4];
    if (u == w) continue;
    if (cross(w - u, p3 - 3 * u) <= 0) return false;
  }
  return true;
}

Placement Trapezoid::placement(const LatticePoint& center) const {
  const Trapezoid m = model_trapezoid(diag, top);
  for (bool mirrored : {false, true}) {
    for (int k = 0; k < 6; ++k) {
      auto map = [&](const LatticePoint& p) { return (mirrored ? p.conj() : p).rotated(k) + center; };
      if (map(m.hinge) == hinge && map(m.tip) == tip && map(m.hinge_foot) == hinge_foot &&
          map(m.tip_foot) == tip_foot)
        return {center, k, mirrored};
    }
  }
  throw InternalError("Trapezoid::placement: not congruent to the model trapezoid");
}

Trapezoid model_trapezoid(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b < a) throw DomainError("model_trapezoid: need 0 < a <= b");
  Trapezoid t;
  t.diag = a;
  t.top = b;
  t.tip = {a, b};
  t.hinge = {a - b, b};
  t.hinge_foot = {2 * a - b, b - a};
  t.tip_foot = {a, b - a};
  t.chirality = 1;
  return t;
}

Necklace necklace(const PosRational& aspect, const LatticePoint& center) {
  if (aspect.p() > aspect.q()) throw DomainError("necklace: aspect must lie in (0, 1]");
  Trapezoid first = model_trapezoid(to_i64(aspect.p()), to_i64(aspect.q()));
  first.hinge += center;
  first.tip += center;
  first.hinge_foot += center;
  first.tip_foot += center;
  return necklace_from(first, center);
}

Necklace necklace_gamma(const Necklace& x) {
  if (x.diag == x.top) throw DomainError("necklace_gamma: the 1/1 necklace is the bottom of the orbit");
  const LatticePoint c = x.center;
  const Trapezoid& t0 = x.trapezoids[0];
  const std::int64_t d = x.diag, t = x.top;
  // The wedge at the hinge is bounded by t0's diagonal (length d) and the
  // bottom of the next trapezoid (length t - d), meeting at 60 degrees.
  const LatticePoint hinge = t0.hinge - c;
  const LatticePoint foot = t0.hinge_foot - c;
  const LatticePoint next_foot = foot.rotated(x.chirality);

  Trapezoid y;
  if (t - d >= d) {
    // Child top is the next trapezoid's bottom; its diagonal is t0's diagonal.
    const LatticePoint u = divide_exact(next_foot - hinge, t - d);
    y.diag = d;
    y.top = t - d;
    y.hinge = next_foot;
    y.tip = hinge;
    y.tip_foot = foot;
    y.hinge_foot = foot + (t - 2 * d) * u;
    y.chirality = x.chirality;
  } else {
    // Child top is t0's diagonal; its diagonal is the next trapezoid's bottom.
    const LatticePoint w = divide_exact(foot - hinge, d);
    y.diag = t - d;
    y.top = d;
    y.hinge = foot;
    y.tip = hinge;
    y.tip_foot = next_foot;
    y.hinge_foot = next_foot + (2 * d - t) * w;
    y.chirality = -x.chirality;
  }
  y.hinge += c;
  y.tip += c;
  y.hinge_foot += c;
  y.tip_foot += c;

  // Incidence conditions: the child's top is a side of a trapezoid of x, and
  // one of its diagonals is a side of the adjacent trapezoid.
  const int next = x.chirality > 0 ? 1 : 5;
  const bool top_on_0 = is_side_of(x, 0, y.hinge, y.tip);
  const bool top_on_next = is_side_of(x, next, y.hinge, y.tip);
  const bool diag_on_0 = is_side_of(x, 0, y.tip, y.tip_foot) || is_side_of(x, 0, y.hinge, y.hinge_foot);
  const bool diag_on_next =
      is_side_of(x, next, y.tip, y.tip_foot) || is_side_of(x, next, y.hinge, y.hinge_foot);
  if (!((top_on_0 && diag_on_next) || (top_on_next && diag_on_0)))
    throw InternalError("necklace_gamma: child violates the incidence conditions");
  if (lattice_length(y.hinge, y.tip) != y.top || lattice_length(y.tip, y.tip_foot) != y.diag ||
      lattice_length(y.hinge, y.hinge_foot) != y.diag ||
      (y.bottom() > 0 && lattice_length(y.hinge_foot, y.tip_foot) != y.bottom()))
    throw InternalError("necklace_gamma: child is not an Eisenstein trapezoid");
  if (c + (y.tip_foot - c).rotated(y.chirality) != y.hinge)
    throw InternalError("necklace_gamma: child trapezoids do not chain");
  return necklace_from(y, c);
}

std::vector<ColoredNecklace> empty_flower(const PosRational& aspect, const LatticePoint& center) {
  std::vector<Necklace> chain{necklace(aspect, center)};
  while (chain.back().diag != chain.back().top) chain.push_back(necklace_gamma(chain.back()));
  std::vector<ColoredNecklace> out;
  out.reserve(chain.size());
  const std::size_t n = chain.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Innermost is White; colors alternate outward.
    const Color c = (n - 1 - i) % 2 == 0 ? Color::White : Color::Black;
    out.push_back({chain[i], c});
  }
  return out;
}

CappedFlower CappedFlower::build(const EisensteinInt& beta_in) {
  if (beta_in.is_zero()) throw DomainError("capped flower: beta must be nonzero");
  const EisensteinInt canon = canonicalize(beta_in);
  if (canon.a == 0) throw DomainError("capped flower: degenerate beta (unit multiple)");
  if (!is_primitive(canon)) throw DomainError("capped flower: beta must be primitive");
  if (canon.norm() > QuotientComplex::kMaxNorm) throw DomainError("capped flower: norm(beta) too large");
  CappedFlower cf;
  cf.beta_ = to_lattice(canon);
  cf.delta_ = LatticePoint{2, -1} * cf.beta_;
  cf.necklaces_ = empty_flower(PosRational(canon.a, canon.b));
  for (int k = 0; k < 6; ++k) {
    cf.fill_[k] = PlaneTriangle::from_vertices({0, 0}, kOne.rotated(k), kOne.rotated(k + 1));
  }
  cf.fill_start_ = Color::Black;  // fill_[0] is Up(0), the triangle on edge [0, 1] above it
  cf.cap_color_ = opposite(cf.necklaces_.front().color);
  return cf;
}

LatticePoint CappedFlower::home_center3(const LatticePoint& p3) const {
  const std::int64_t denom = 3 * delta_.norm();
  const LatticePoint x = p3 * delta_.conj();
  auto fdiv = [](std::int64_t n, std::int64_t d) {
    std::int64_t q = n / d;
    if (n % d != 0 && ((n < 0) != (d < 0))) --q;
    return q;
  };
  const LatticePoint z0{fdiv(x.a, denom), fdiv(x.b, denom)};
  LatticePoint best;
  std::int64_t best_dist = -1;
  for (const LatticePoint& dz : {LatticePoint{0, 0}, LatticePoint{1, 0}, LatticePoint{0, 1}, LatticePoint{1, 1}}) {
    const LatticePoint z = z0 + dz;
    const std::int64_t dist = (p3 - 3 * (delta_ * z)).norm();
    if (best_dist < 0 || dist < best_dist || (dist == best_dist && z < best)) {
      best = z;
      best_dist = dist;
    }
  }
  return 3 * (delta_ * best);
}

CappedFlower::Classification CappedFlower::classify(const PlaneTriangle& t) const {
  const LatticePoint rel = t.centroid3() - home_center3(t.centroid3());
  const PlaneTriangle local = PlaneTriangle::from_centroid3(rel);
  for (int k = 0; k < 6; ++k) {
    if (local == fill_[k]) return {Region::Fill, -1, -1, k, fill_color(k)};
  }
  const std::int64_t r2 = rel.norm();
  for (std::size_t i = 0; i < necklaces_.size(); ++i) {
    const Necklace& n = necklaces_[i].necklace;
    // The necklace lies inside the disk through its tips.
    if (r2 >= 9 * n.trapezoids[0].tip.norm()) break;
    for (int j = 0; j < 6; ++j) {
      if (n.trapezoids[j].contains3(rel))
        return {Region::Necklace, static_cast<int>(i), j, -1, necklaces_[i].color};
    }
  }
  return {Region::Cap, -1, -1, -1, cap_color_};
}

Color CappedFlower::color_at(const PlaneTriangle& t) const { return classify(t).color; }

CappedFlower CappedFlower::with_swapped_colors() const {
  CappedFlower cf = *this;
  for (auto& n : cf.necklaces_) n.color = opposite(n.color);
  cf.fill_start_ = opposite(fill_start_);
  cf.cap_color_ = opposite(cap_color_);
  return cf;
}

CappedFlower CappedFlower::with_alternate_fill() const {
  CappedFlower cf = *this;
  cf.fill_start_ = opposite(fill_start_);
  return cf;
}

std::int64_t FlowerCensus::total() const {
  std::int64_t s = fill_triangles + cap_triangles;
  for (std::int64_t n : necklace_triangles) s += n;
  return s;
}

FlowerCensus census(const CappedFlower& cf) {
  FlowerCensus out;
  out.necklace_triangles.assign(cf.necklaces().size(), 0);
  const std::int64_t r = 2 * (std::llabs(cf.beta().a) + std::llabs(cf.beta().b)) + 2;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = -r; b <= r; ++b) {
      for (Orientation o : {Orientation::Up, Orientation::Down}) {
        const PlaneTriangle t{{a, b}, o};
        const LatticePoint c3 = t.centroid3();
        if (!cf.home_center3(c3).is_zero()) continue;
        const auto cls = cf.classify(t);
        switch (cls.region) {
          case CappedFlower::Region::Necklace: ++out.necklace_triangles[cls.necklace]; break;
          case CappedFlower::Region::Fill: ++out.fill_triangles; break;
          case CappedFlower::Region::Cap: ++out.cap_triangles; break;
        }
      }
    }
  }
  return out;
}

std::vector<std::int64_t> stripe_counts(const std::vector<ColoredNecklace>& flower) {
  std::vector<std::int64_t> runs;
  std::int64_t run = 0;
  for (std::size_t i = 0; i < flower.size(); ++i) {
    ++run;
    bool stacked = false;
    if (i + 1 < flower.size()) {
      for (const Trapezoid& x : flower[i].necklace.trapezoids) {
        if (x.degenerate()) continue;
        for (const Trapezoid& y : flower[i + 1].necklace.trapezoids) {
          if (same_segment(x.hinge_foot, x.tip_foot, y.hinge, y.tip)) stacked = true;
        }
      }
    }
    if (!stacked) {
      runs.push_back(run);
      run = 0;
    }
  }
  return runs;
}

std::vector<std::int64_t> stripe_counts(const CappedFlower& cf) { return stripe_counts(cf.necklaces()); }

BigInt layer_fold_count(const PosRational& aspect) {
  if (aspect.p() > aspect.q()) throw DomainError("layer_fold_count: aspect must lie in (0, 1]");
  BigInt d = aspect.p(), t = aspect.q();
  BigInt tops = 0;
  while (d != t) {
    if (t >= 2 * d) {
      // m consecutive necklaces with diagonal d and tops t, t-d, ..., t-(m-1)d.
      const BigInt m = t / d - 1;
      tops += m * t - d * (m * (m - 1) / 2);
      t -= m * d;
      continue;
    }
    // d < t < 2d: one necklace, then the child (t - d)/d.
    tops += t;
    const BigInt nd = t - d;
    t = d;
    d = nd;
  }
  return 2 * tops + 3 + 2 * (aspect.p() + aspect.q());
}

}  // namespace eisenfold
