#pragma once

#include <array>

#include "concentric/geom.hpp"

namespace concentric {

/// Closed-form answer for three or four circles.
struct ClosedFormResult {
  bool exists = false;
  bool degenerate = false;
  double r1 = 0.0;
  double r2 = 0.0;
};

enum class SquareRejection { None, SumCondition, AssociatedTriangle };

struct SquareFeasibility : ClosedFormResult {
  SquareRejection reason = SquareRejection::None;
};

struct AssociatedTriangle {
  std::array<double, 3> sides{};
  double area = 0.0;
};

/// The four triangles built from two outer (resp. inner) radii and √2 times
/// one inner (resp. outer) radius. Under the sum condition they share an area.
struct AssociatedTriangleSet {
  std::array<AssociatedTriangle, 4> triangles{};
  // max over the four of |64Δ² - (3(Σd²)² - 8Σd⁴)| / max(1, 3(Σd²)²)
  double identity_residual = 0.0;
};

/// Degree-six consequence of the m = 3 moment identity for four circles, and
/// its factorization; degree6_residual == 3 * factor_product.
struct SquareCubicResidual {
  double degree6_residual = 0.0;  // 8Σd⁶ + (Σd²)³ - 6(Σd²)(Σd⁴)
  double factor_product = 0.0;    // (d1²+d2²-d3²-d4²)(d1²+d3²-d2²-d4²)(d1²+d4²-d2²-d3²)
};

/// Three circles with ascending radii. Throws UnsortedRadii.
ClosedFormResult triangle_feasibility(double d1, double d2, double d3, const Tolerance& tol = {});

/// Remaining two circle radii for equilateral triangles of circumradii r1, r2
/// when one vertex distance is d1. Throws TriangleInequalityViolated.
std::array<double, 2> triangle_circle_radii(double r1, double r2, double d1,
                                            const Tolerance& tol = {});

/// Four circles with ascending radii. Throws UnsortedRadii.
SquareFeasibility square_feasibility(const std::array<double, 4>& d, const Tolerance& tol = {});

SquareCubicResidual square_cubic_residual(const std::array<double, 4>& d);

/// Throws SumConditionViolated, UnsortedRadii, TriangleInequalityViolated.
AssociatedTriangleSet associated_triangles(const std::array<double, 4>& d,
                                           const Tolerance& tol = {});

/// Remaining three circle radii for squares of circumradii r1, r2 when one
/// vertex distance is d1. Throws TriangleInequalityViolated.
std::array<double, 3> square_circle_radii(double r1, double r2, double d1,
                                          const Tolerance& tol = {});

}  // namespace concentric
