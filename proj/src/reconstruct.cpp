#include "concentric/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace concentric {

namespace {

std::string describe_failure(const FeasibilityReport& report, const Tolerance& tol) {
  std::ostringstream os;
  os.precision(6);
  if (!report.condition1_ok) {
    os << "condition I fails: ratio " << report.condition1_ratio << " outside [2/3, 1]";
  }
  for (std::size_t i = 0; i < report.condition2_residuals.size(); ++i) {
    const double r = report.condition2_residuals[i];
    if (r > tol.relative_eps + tol.absolute_floor) {
      if (os.tellp() > 0) os << "; ";
      os << "condition II fails at m=" << (i + 3) << " with residual " << r;
    }
  }
  return os.str();
}

// Polygon of circumradius r centered `offset` along +x from M, rotated so its
// vertex distances from M reproduce the family radii.
RegularPolygon place(const CircleFamily& family, int n, double r, double offset,
                     const Tolerance& tol) {
  const PlanePoint m = family.center();
  const PlanePoint center = m + PlanePoint{offset, 0.0};
  // centered on M: the distances are all r whatever the phase
  if (offset <= tol.bound(r)) return {n, center, r, 0.0};

  // Candidates go largest distance first (cos θ nearest -1 is best conditioned),
  // + branch before -. The first one that verifies at the base tolerance wins;
  // otherwise the smallest gap is kept and checked against 10x the tolerance.
  const Tolerance accept = tol.scaled(10.0);
  const std::vector<double>& radii = family.radii();
  double best_gap = std::numeric_limits<double>::infinity();
  double best_phase = 0.0;
  double previous = -1.0;
  for (auto it = radii.rbegin(); it != radii.rend(); ++it) {
    if (*it == previous) continue;
    previous = *it;
    for (double theta : phase_candidates(r, offset, *it, tol)) {
      // the vertex at angle θ from the center→M direction, which points along -x
      const RegularPolygon trial(n, center, r, std::numbers::pi + theta);
      const auto distances = distance_multiset(trial, m);
      if (multiset_close(distances, radii, tol)) return trial;
      const double gap = multiset_gap(distances, radii);
      if (gap < best_gap) {
        best_gap = gap;
        best_phase = trial.phase();
      }
    }
  }
  RegularPolygon best(n, center, r, best_phase);
  if (!multiset_close(distance_multiset(best, m), radii, accept)) {
    throw GeometryError(ErrorCode::PhaseSearchFailed,
                        "no phase of the radius " + std::to_string(r) +
                            " polygon reproduces the radii; best gap " + std::to_string(best_gap));
  }
  return best;
}

}  // namespace

std::vector<double> phase_candidates(double r, double l, double d, const Tolerance& tol) {
  if (!(r > 0.0) || !(l > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateGeometry,
                        "zero radius or offset: every phase works when d = |r - l|, none "
                        "otherwise");
  }
  const double c = (r * r + l * l - d * d) / (2.0 * r * l);
  if (std::fabs(c) > 1.0 + tol.relative_eps) return {};
  const double theta = std::acos(std::clamp(c, -1.0, 1.0));
  if (2.0 * r * std::sin(theta) <= tol.bound(r)) return {theta};
  return {theta, -theta};
}

Reconstruction reconstruct_polygons(const CircleFamily& family, const Tolerance& tol) {
  const CyclicAverages av = cyclic_averages(family);
  FeasibilityReport report = assess_feasibility(av, tol);
  if (!report.feasible()) {
    throw InfeasibleFamilyError(describe_failure(report, tol), report);
  }
  const RadiiPair radii = recover_circumradii(av, tol);
  const int n = family.size();
  const bool second_is_point = radii.r2 <= tol.bound(radii.r1);

  RegularPolygon first = place(family, n, radii.r1, radii.r2, tol);
  RegularPolygon second =
      second_is_point ? RegularPolygon(n, family.center() + PlanePoint{radii.r1, 0.0}, 0.0, 0.0)
                      : place(family, n, radii.r2, radii.r1, tol);

  Reconstruction out{first, second, std::move(report), radii, 0.0, 0.0, second_is_point};
  out.first_residual = verify_reconstruction(family, first);
  out.second_residual = verify_reconstruction(family, second);
  return out;
}

double verify_reconstruction(const CircleFamily& family, const RegularPolygon& poly) {
  if (poly.n() != family.size()) {
    throw GeometryError(ErrorCode::MismatchedOrder,
                        "polygon has " + std::to_string(poly.n()) + " vertices, family has " +
                            std::to_string(family.size()) + " circles");
  }
  return multiset_gap(distance_multiset(poly, family.center()), family.radii());
}

}  // namespace concentric
