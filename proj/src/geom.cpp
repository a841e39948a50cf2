#include "concentric/geom.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace concentric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorCode::CoincidentCircles: return "CoincidentCircles";
    case ErrorCode::InvalidMomentOrder: return "InvalidMomentOrder";
    case ErrorCode::InfeasibleMoments: return "InfeasibleMoments";
    case ErrorCode::MismatchedOrder: return "MismatchedOrder";
    case ErrorCode::CoincidentAuxiliaryCircles: return "CoincidentAuxiliaryCircles";
    case ErrorCode::NotACandidateCenter: return "NotACandidateCenter";
    case ErrorCode::NoSharedVertex: return "NoSharedVertex";
    case ErrorCode::SumConditionViolated: return "SumConditionViolated";
    case ErrorCode::UnsortedRadii: return "UnsortedRadii";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::InfeasibleFamily: return "InfeasibleFamily";
    case ErrorCode::PhaseSearchFailed: return "PhaseSearchFailed";
  }
  return "Unknown";
}

double normalize_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2π
  if (a >= kTwoPi) a = 0.0;
  return a;
}

Tolerance::Tolerance(double relative, double absolute)
    : relative_eps(relative), absolute_floor(absolute) {
  if (!(relative > 0.0 && relative < 1e-3)) {
    throw GeometryError(ErrorCode::InvalidArgument,
                        "relative tolerance must lie in (0, 1e-3), got " + std::to_string(relative));
  }
  if (!(absolute >= 0.0) || !std::isfinite(absolute)) {
    throw GeometryError(ErrorCode::InvalidArgument, "absolute tolerance floor must be >= 0");
  }
}

Tolerance Tolerance::scaled(double factor) const {
  Tolerance t;
  t.relative_eps = relative_eps * factor;
  t.absolute_floor = absolute_floor * factor;
  return t;
}

RegularPolygon::RegularPolygon(int n, PlanePoint center, double circumradius, double phase)
    : n_(n), center_(center), circumradius_(circumradius), phase_(0.0) {
  if (n < 3) {
    throw GeometryError(ErrorCode::InvalidArgument,
                        "a regular polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  if (!std::isfinite(center.x) || !std::isfinite(center.y)) {
    throw GeometryError(ErrorCode::InvalidArgument, "polygon center must be finite");
  }
  if (!(circumradius >= 0.0) || !std::isfinite(circumradius)) {
    throw GeometryError(ErrorCode::InvalidArgument, "circumradius must be finite and >= 0");
  }
  if (!std::isfinite(phase)) {
    throw GeometryError(ErrorCode::InvalidArgument, "phase must be finite");
  }
  phase_ = normalize_angle(phase);
}

PlanePoint RegularPolygon::vertex(int k) const {
  return center_ + polar(circumradius_, phase_ + kTwoPi * k / n_);
}

std::vector<PlanePoint> vertices(const RegularPolygon& poly) {
  std::vector<PlanePoint> out;
  out.reserve(static_cast<std::size_t>(poly.n()));
  for (int k = 0; k < poly.n(); ++k) out.push_back(poly.vertex(k));
  return out;
}

namespace {

std::array<double, 3> sorted_descending(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace

TriangleShape classify_triangle(double a, double b, double c, const Tolerance& tol) {
  const auto [x, y, z] = sorted_descending(a, b, c);
  const double slack = (y + z) - x;
  const double bound = tol.bound(x);
  if (slack < -bound) return TriangleShape::Violated;
  if (slack <= bound) return TriangleShape::Degenerate;
  return TriangleShape::Proper;
}

double heron_area(double a, double b, double c, const Tolerance& tol) {
  if (!(a >= 0.0 && b >= 0.0 && c >= 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "side lengths must be non-negative");
  }
  if (classify_triangle(a, b, c, tol) == TriangleShape::Violated) {
    throw GeometryError(ErrorCode::TriangleInequalityViolated,
                        "sides (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                            std::to_string(c) + ") do not form a triangle");
  }
  const auto [x, y, z] = sorted_descending(a, b, c);
  // inside the tolerated band past collinearity
  if (z - (x - y) <= 0.0) return 0.0;
  const double product = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(product, 0.0));
}

std::vector<PlanePoint> circle_circle_intersection(PlanePoint c1, double r1, PlanePoint c2,
                                                   double r2, const Tolerance& tol) {
  if (!(r1 >= 0.0 && r2 >= 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "circle radii must be non-negative");
  }
  const PlanePoint axis = c2 - c1;
  const double d = norm(axis);
  const double rmax = std::max(r1, r2);

  if (d <= tol.bound(std::max(rmax, d))) {
    if (std::fabs(r1 - r2) > tol.bound(rmax)) return {};
    if (rmax <= tol.bound(rmax)) return {0.5 * (c1 + c2)};
    throw GeometryError(ErrorCode::CoincidentCircles,
                        "concentric circles of equal radius intersect everywhere");
  }

  const double outer_gap = d - (r1 + r2);
  const double inner_gap = d - std::fabs(r1 - r2);
  if (outer_gap > tol.bound(r1 + r2)) return {};
  if (inner_gap < -tol.bound(rmax)) return {};

  const PlanePoint u = (1.0 / d) * axis;
  const double along = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
  const PlanePoint foot = c1 + along * u;
  if (std::fabs(outer_gap) <= tol.bound(r1 + r2) || std::fabs(inner_gap) <= tol.bound(rmax)) {
    return {foot};
  }

  const double h = std::sqrt(std::max((r1 - along) * (r1 + along), 0.0));
  const PlanePoint left{-u.y, u.x};
  return {foot + h * left, foot - h * left};
}

std::vector<double> distance_multiset(const RegularPolygon& poly, PlanePoint m_point) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(poly.n()));
  for (int k = 0; k < poly.n(); ++k) out.push_back(distance(m_point, poly.vertex(k)));
  std::sort(out.begin(), out.end());
  return out;
}

bool multiset_close(std::span<const double> a, std::span<const double> b, const Tolerance& tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > tol.bound(a[i])) return false;
  }
  return true;
}

double multiset_gap(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::fabs(a[i] - b[i]));
  return gap;
}

}  // namespace concentric
