#include "concentric/special_cases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace concentric {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

template <std::size_t N>
void require_ascending(const std::array<double, N>& d) {
  for (double v : d) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw GeometryError(ErrorCode::InvalidArgument, "radii must be finite and >= 0");
    }
  }
  if (!std::is_sorted(d.begin(), d.end())) {
    throw GeometryError(ErrorCode::UnsortedRadii, "radii must be sorted ascending");
  }
}

double clamped_sqrt(double squared, double scale, const Tolerance& tol) {
  if (squared < 0.0 && squared >= -tol.bound(scale)) squared = 0.0;
  return std::sqrt(std::max(squared, 0.0));
}

}  // namespace

ClosedFormResult triangle_feasibility(double d1, double d2, double d3, const Tolerance& tol) {
  require_ascending(std::array<double, 3>{d1, d2, d3});
  ClosedFormResult out;
  const TriangleShape shape = classify_triangle(d1, d2, d3, tol);
  out.exists = shape != TriangleShape::Violated;
  out.degenerate = shape == TriangleShape::Degenerate;
  if (!out.exists) return out;

  const double area = heron_area(d1, d2, d3, tol);
  const double sum_sq = d1 * d1 + d2 * d2 + d3 * d3;
  out.r1 = std::sqrt((sum_sq + 4.0 * kSqrt3 * area) / 6.0);
  out.r2 = clamped_sqrt((sum_sq - 4.0 * kSqrt3 * area) / 6.0, sum_sq, tol);
  return out;
}

std::array<double, 2> triangle_circle_radii(double r1, double r2, double d1,
                                            const Tolerance& tol) {
  const double area = heron_area(r1, r2, d1, tol);
  const double base = 3.0 * (r1 * r1 + r2 * r2) - d1 * d1;
  return {clamped_sqrt(0.5 * (base - 4.0 * kSqrt3 * area), base, tol),
          clamped_sqrt(0.5 * (base + 4.0 * kSqrt3 * area), base, tol)};
}

SquareFeasibility square_feasibility(const std::array<double, 4>& d, const Tolerance& tol) {
  require_ascending(d);
  SquareFeasibility out;
  const double outer = d[0] * d[0] + d[3] * d[3];
  const double inner = d[1] * d[1] + d[2] * d[2];
  if (!tol.close(outer, inner, d[3] * d[3])) {
    out.reason = SquareRejection::SumCondition;
    return out;
  }
  const double a = d[0];
  const double b = d[3];
  const double c = kSqrt2 * d[1];
  const TriangleShape shape = classify_triangle(a, b, c, tol);
  if (shape == TriangleShape::Violated) {
    out.reason = SquareRejection::AssociatedTriangle;
    return out;
  }
  out.exists = true;
  out.degenerate = shape == TriangleShape::Degenerate;
  const double area = heron_area(a, b, c, tol);
  out.r1 = std::sqrt(0.25 * outer + area);
  out.r2 = clamped_sqrt(0.25 * outer - area, outer, tol);
  return out;
}

SquareCubicResidual square_cubic_residual(const std::array<double, 4>& d) {
  std::array<double, 4> sq{};
  std::transform(d.begin(), d.end(), sq.begin(), [](double v) { return v * v; });
  double s2 = 0.0, s4 = 0.0, s6 = 0.0;
  for (double q : sq) {
    s2 += q;
    s4 += q * q;
    s6 += q * q * q;
  }
  SquareCubicResidual out;
  out.degree6_residual = 8.0 * s6 + s2 * s2 * s2 - 6.0 * s2 * s4;
  out.factor_product = (sq[0] + sq[1] - sq[2] - sq[3]) * (sq[0] + sq[2] - sq[1] - sq[3]) *
                       (sq[0] + sq[3] - sq[1] - sq[2]);
  return out;
}

AssociatedTriangleSet associated_triangles(const std::array<double, 4>& d, const Tolerance& tol) {
  require_ascending(d);
  const double outer = d[0] * d[0] + d[3] * d[3];
  const double inner = d[1] * d[1] + d[2] * d[2];
  if (!tol.close(outer, inner, d[3] * d[3])) {
    throw GeometryError(ErrorCode::SumConditionViolated,
                        "outer and inner squared radii sums differ");
  }
  AssociatedTriangleSet set;
  set.triangles[0].sides = {d[0], d[3], kSqrt2 * d[1]};
  set.triangles[1].sides = {d[0], d[3], kSqrt2 * d[2]};
  set.triangles[2].sides = {d[1], d[2], kSqrt2 * d[3]};
  set.triangles[3].sides = {d[1], d[2], kSqrt2 * d[0]};

  double s2 = 0.0, s4 = 0.0;
  for (double v : d) {
    s2 += v * v;
    s4 += v * v * v * v;
  }
  const double lhs = 3.0 * s2 * s2 - 8.0 * s4;
  for (AssociatedTriangle& t : set.triangles) {
    t.area = heron_area(t.sides[0], t.sides[1], t.sides[2], tol);
    const double gap = std::fabs(64.0 * t.area * t.area - lhs) / std::fmax(1.0, 3.0 * s2 * s2);
    set.identity_residual = std::max(set.identity_residual, gap);
  }
  return set;
}

std::array<double, 3> square_circle_radii(double r1, double r2, double d1, const Tolerance& tol) {
  const double area = heron_area(r1, r2, d1, tol);
  const double base = r1 * r1 + r2 * r2;
  return {clamped_sqrt(base - 4.0 * area, base, tol), std::sqrt(base + 4.0 * area),
          clamped_sqrt(2.0 * base - d1 * d1, base, tol)};
}

}  // namespace concentric
