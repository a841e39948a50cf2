#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "concentric/error.hpp"

namespace concentric {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend PlanePoint operator*(double s, PlanePoint p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

inline double norm(PlanePoint p) { return std::hypot(p.x, p.y); }
inline double distance(PlanePoint a, PlanePoint b) { return norm(b - a); }
inline PlanePoint polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// Reduces an angle to [0, 2π).
double normalize_angle(double angle);

/// Comparison tolerance shared by every check in the library.
///
/// A quantity q is considered equal to a reference of magnitude `scale` when
/// |q - ref| <= absolute_floor + relative_eps * max(1, |scale|).
struct Tolerance {
  double relative_eps = 1e-9;
  double absolute_floor = 1e-12;

  constexpr Tolerance() = default;
  Tolerance(double relative, double absolute);

  double bound(double scale) const {
    return absolute_floor + relative_eps * std::fmax(1.0, std::fabs(scale));
  }
  bool close(double a, double b, double scale) const { return std::fabs(a - b) <= bound(scale); }
  Tolerance scaled(double factor) const;
};

/// A regular n-gon given by vertex count, center, circumradius and the
/// angle of vertex 0 about the center. Phase is kept in [0, 2π).
class RegularPolygon {
 public:
  RegularPolygon(int n, PlanePoint center, double circumradius, double phase = 0.0);

  int n() const noexcept { return n_; }
  PlanePoint center() const noexcept { return center_; }
  double circumradius() const noexcept { return circumradius_; }
  double phase() const noexcept { return phase_; }

  PlanePoint vertex(int k) const;
  RegularPolygon rephased(double phase) const { return {n_, center_, circumradius_, phase}; }
  RegularPolygon translated(PlanePoint offset) const {
    return {n_, center_ + offset, circumradius_, phase_};
  }

 private:
  int n_;
  PlanePoint center_;
  double circumradius_;
  double phase_;
};

/// Vertices in counterclockwise order starting at angle `phase`.
std::vector<PlanePoint> vertices(const RegularPolygon& poly);

enum class TriangleShape { Proper, Degenerate, Violated };

/// Classifies side lengths against the triangle inequality; Degenerate means
/// the largest side equals the sum of the other two within tolerance.
TriangleShape classify_triangle(double a, double b, double c, const Tolerance& tol = {});

/// Area of the triangle with the given side lengths, using the sorted
/// cancellation-free product form. Exactly 0 when the largest side is
/// no shorter than the sum of the others (within tolerance); a small positive
/// slack keeps its true, small area.
/// Throws TriangleInequalityViolated.
double heron_area(double a, double b, double c, const Tolerance& tol = {});

/// Zero, one (tangent) or two intersection points. With two points the one to
/// the left of the c1→c2 axis comes first. Throws CoincidentCircles when the
/// circles coincide with positive radius.
std::vector<PlanePoint> circle_circle_intersection(PlanePoint c1, double r1, PlanePoint c2,
                                                   double r2, const Tolerance& tol = {});

/// Distances from `m_point` to every vertex, sorted ascending.
std::vector<double> distance_multiset(const RegularPolygon& poly, PlanePoint m_point);

bool multiset_close(std::span<const double> a, std::span<const double> b,
                    const Tolerance& tol = {});

/// Largest elementwise gap of two sorted sequences; infinity on length mismatch.
double multiset_gap(std::span<const double> a, std::span<const double> b);

}  // namespace concentric
