#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <latcvx/io.hpp>

namespace latcvx::cli {

/// Extra geometry drawn on top of the polygon.
struct Overlay {
  std::vector<std::pair<RatVector, RatVector>> arrows;    // (base point, direction)
  std::vector<std::pair<RatVector, RatVector>> segments;  // (a, b)
};

struct RenderOptions {
  /// xmin, xmax, ymin, ymax; defaults to the bounding box of the polygon.
  std::optional<std::array<Rational, 4>> window;
  Overlay overlay;
  int pixels_per_unit = 60;
};

/// Arrows for reduced-certificate witnesses, segments for complete ones.
/// Accepts a certificate object or the output of `latcvx check`.
Overlay overlay_from_certificate(const io::json& j);

/// Deterministic SVG of a planar polytope, the lattice points in the window
/// and the overlay. Error "wrong dimension".
std::string render_svg(const Polytope& p, const Lattice& l, const RenderOptions& opt);

}  // namespace latcvx::cli
