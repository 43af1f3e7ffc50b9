#pragma once

// Deterministic SVG pictures of the universal cover of T(beta).
//
// Lattice point (a, b) is drawn at (a + b/2, b sqrt(3)/2) * scale with the y
// axis flipped. The view is the union of domains x domains translates
// i beta + j alpha beta of the half-open rhombus spanned by beta and alpha beta,
// a fundamental domain of G_beta.

#include <optional>
#include <string>

#include "eisenfold/coloring.hpp"

namespace eisenfold {

struct RenderSpec {
  enum class Content { ContinuedFraction, Alternating, Given, Bare };

  LatticePoint beta;
  int domains = 1;
  bool show_rhombus = true;
  bool show_folds = true;
  double scale = 20;
  Content content = Content::ContinuedFraction;
  std::optional<FaceColoring> coloring;  // Content::Given
};

// Fold edges are <line class="fold"> elements carrying data-mid="x y", the
// doubled lattice coordinates of the edge midpoint.
std::string render_svg(const RenderSpec& spec);

// The necklaces of the empty flower of aspect p/q, each trapezoid outlined.
std::string render_empty_flower_svg(const PosRational& aspect, double scale = 20);

// Whether the doubled point m2 lies in the half-open rhombus spanned by beta and alpha beta.
bool in_fundamental_rhombus(const LatticePoint& beta, const LatticePoint& m2, std::int64_t multiplier = 2);

}  // namespace eisenfold
