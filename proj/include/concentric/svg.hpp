#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concentric/geom.hpp"

namespace concentric::io {

/// A configuration to draw: concentric circles about `center`, up to two
/// polygons and the point M.
struct SvgScene {
  PlanePoint center;
  std::vector<double> radii;
  std::vector<RegularPolygon> polygons;
  std::optional<PlanePoint> m_point;
};

/// SVG 1.1 document. The viewBox is the scene's bounding circle plus a 10%
/// margin; circles are gray strokes, polygon 1 solid, polygon 2 dashed, M a
/// filled dot. Element order is fixed so identical scenes give identical bytes.
std::string render_svg(const SvgScene& scene);

}  // namespace concentric::io
