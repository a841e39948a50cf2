#include "concentric/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace concentric::io {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

// SVG's y axis points down; the scene is drawn with y flipped.
std::string coords(PlanePoint p) { return num(p.x) + "," + num(-p.y); }

}  // namespace

std::string render_svg(const SvgScene& scene) {
  const PlanePoint c = scene.center;
  double extent = 0.0;
  for (double r : scene.radii) extent = std::max(extent, r);
  for (const RegularPolygon& poly : scene.polygons) {
    extent = std::max(extent, distance(c, poly.center()) + poly.circumradius());
  }
  if (scene.m_point) extent = std::max(extent, distance(c, *scene.m_point));
  if (extent <= 0.0) extent = 1.0;

  const double half = 1.1 * extent;
  const double stroke = extent / 250.0;
  const double dot = extent / 80.0;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
         "viewBox=\"" +
         num(c.x - half) + " " + num(-c.y - half) + " " + num(2 * half) + " " + num(2 * half) +
         "\">\n";

  svg += "  <g id=\"circles\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" + num(stroke) +
         "\">\n";
  for (double r : scene.radii) {
    svg += "    <circle cx=\"" + num(c.x) + "\" cy=\"" + num(-c.y) + "\" r=\"" + num(r) +
           "\"/>\n";
  }
  svg += "  </g>\n";

  for (std::size_t i = 0; i < scene.polygons.size(); ++i) {
    const RegularPolygon& poly = scene.polygons[i];
    std::string points;
    for (const PlanePoint v : vertices(poly)) {
      if (!points.empty()) points += ' ';
      points += coords(v);
    }
    svg += "  <polygon id=\"polygon" + std::to_string(i + 1) +
           "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + num(2 * stroke) + "\"";
    if (i > 0) svg += " stroke-dasharray=\"" + num(6 * stroke) + "," + num(4 * stroke) + "\"";
    svg += " points=\"" + points + "\"/>\n";
  }

  for (std::size_t i = 0; i < scene.polygons.size(); ++i) {
    const PlanePoint o = scene.polygons[i].center();
    svg += "  <circle id=\"O" + std::to_string(i + 1) + "\" cx=\"" + num(o.x) + "\" cy=\"" +
           num(-o.y) + "\" r=\"" + num(dot) + "\" fill=\"#ffffff\" stroke=\"#000000\" "
           "stroke-width=\"" + num(stroke) + "\"/>\n";
    svg += "  <text x=\"" + num(o.x + 1.5 * dot) + "\" y=\"" + num(-o.y - 1.5 * dot) +
           "\" font-size=\"" + num(5 * dot) + "\">O" + std::to_string(i + 1) + "</text>\n";
  }

  if (scene.m_point) {
    const PlanePoint m = *scene.m_point;
    svg += "  <circle id=\"M\" cx=\"" + num(m.x) + "\" cy=\"" + num(-m.y) + "\" r=\"" +
           num(dot) + "\" fill=\"#000000\"/>\n";
    svg += "  <text x=\"" + num(m.x + 1.5 * dot) + "\" y=\"" + num(-m.y - 1.5 * dot) +
           "\" font-size=\"" + num(5 * dot) + "\">M</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace concentric::io
