#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "concentric/geom.hpp"
#include "concentric/moments.hpp"

namespace concentric {

struct AuxiliaryCircle {
  PlanePoint center;
  double radius = 0.0;
};

/// One set of concentric circles threading both polygons. The second polygon
/// is the input rotated about its own center.
struct PairingResult {
  PlanePoint m_point;
  RegularPolygon aligned_second;
  CircleFamily circles;
  std::pair<int, int> matched_vertex_pair;  // vertex of polygon 1, vertex of aligned polygon 2
};

struct PairingReport {
  std::vector<PairingResult> results;
  // candidates whose full multiset check failed after alignment
  std::vector<std::string> diagnostics;
};

/// Circle about p1's center with p2's circumradius, and vice versa.
std::array<AuxiliaryCircle, 2> auxiliary_circles(const RegularPolygon& p1,
                                                 const RegularPolygon& p2);

/// |R1 - R2| <= |O1 O2| <= R1 + R2 within tolerance.
bool intersection_feasible(const RegularPolygon& p1, const RegularPolygon& p2,
                           const Tolerance& tol = {});

/// Common points of the auxiliary circles. Throws CoincidentAuxiliaryCircles
/// for concentric polygons of equal circumradius.
std::vector<PlanePoint> candidate_centers(const RegularPolygon& p1, const RegularPolygon& p2,
                                          const Tolerance& tol = {});

/// Rephases p2 so one of its vertices sits at the same distance from
/// `m_point` as vertex `ref_vertex` of p1. Returns both mirror solutions, or
/// one when they coincide.
std::vector<RegularPolygon> align_second_polygon(const RegularPolygon& p1,
                                                 const RegularPolygon& p2, PlanePoint m_point,
                                                 int ref_vertex, const Tolerance& tol = {});

/// Index of the vertex of `poly` nearest to `point` (lowest index on ties).
int nearest_vertex(const RegularPolygon& poly, PlanePoint point);

PairingReport pair_polygons(const RegularPolygon& p1, const RegularPolygon& p2,
                            const Tolerance& tol = {});

/// Pairing for polygons known to share a vertex. Throws NoSharedVertex.
PairingReport shared_vertex_pairing(const RegularPolygon& p1, const RegularPolygon& p2,
                                    const Tolerance& tol = {});

}  // namespace concentric
