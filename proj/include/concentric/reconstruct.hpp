#pragma once

#include <vector>

#include "concentric/geom.hpp"
#include "concentric/moments.hpp"

namespace concentric {

/// Raised when a circle family fails the existence conditions; carries the
/// full report so callers can show which condition failed.
class InfeasibleFamilyError : public GeometryError {
 public:
  InfeasibleFamilyError(const std::string& message, FeasibilityReport report)
      : GeometryError(ErrorCode::InfeasibleFamily, message), report_(std::move(report)) {}

  const FeasibilityReport& report() const noexcept { return report_; }

 private:
  FeasibilityReport report_;
};

/// Two concrete polygons realizing a circle family.
///
/// Placement convention: M is the family center, the first polygon (radius r1)
/// is centered r2 along +x from M and the second (radius r2) r1 along +x.
struct Reconstruction {
  RegularPolygon first;
  RegularPolygon second;
  FeasibilityReport report;
  RadiiPair radii;
  double first_residual = 0.0;
  double second_residual = 0.0;
  bool second_is_point = false;  // r2 vanished: the second polygon collapses to a point
};

/// Angles θ with d² = r² + l² - 2 r l cos θ. Throws DegenerateGeometry when
/// r or l is zero.
std::vector<double> phase_candidates(double r, double l, double d, const Tolerance& tol = {});

/// Throws InfeasibleFamilyError or PhaseSearchFailed.
Reconstruction reconstruct_polygons(const CircleFamily& family, const Tolerance& tol = {});

/// Max gap between the sorted vertex distances of `poly` from the family
/// center and the family radii. Throws MismatchedOrder.
double verify_reconstruction(const CircleFamily& family, const RegularPolygon& poly);

}  // namespace concentric
