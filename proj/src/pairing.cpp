#include "concentric/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace concentric {

namespace {

void require_same_order(const RegularPolygon& p1, const RegularPolygon& p2) {
  if (p1.n() != p2.n()) {
    throw GeometryError(ErrorCode::MismatchedOrder, "polygons have " + std::to_string(p1.n()) +
                                                        " and " + std::to_string(p2.n()) +
                                                        " vertices");
  }
}

double configuration_scale(const RegularPolygon& p1, const RegularPolygon& p2) {
  return std::max({p1.circumradius(), p2.circumradius(), distance(p1.center(), p2.center())});
}

// Same vertex set, regardless of labeling.
bool same_polygon(const RegularPolygon& a, const RegularPolygon& b, const Tolerance& tol) {
  if (a.n() != b.n()) return false;
  const double scale = std::max(a.circumradius(), norm(a.center()));
  if (distance(a.center(), b.center()) > tol.bound(scale)) return false;
  if (!tol.close(a.circumradius(), b.circumradius(), scale)) return false;
  const PlanePoint v0 = a.vertex(0);
  for (int k = 0; k < b.n(); ++k) {
    if (distance(v0, b.vertex(k)) <= tol.bound(scale)) return true;
  }
  return false;
}

}  // namespace

std::array<AuxiliaryCircle, 2> auxiliary_circles(const RegularPolygon& p1,
                                                 const RegularPolygon& p2) {
  require_same_order(p1, p2);
  return {AuxiliaryCircle{p1.center(), p2.circumradius()},
          AuxiliaryCircle{p2.center(), p1.circumradius()}};
}

bool intersection_feasible(const RegularPolygon& p1, const RegularPolygon& p2,
                           const Tolerance& tol) {
  require_same_order(p1, p2);
  const double r1 = p1.circumradius();
  const double r2 = p2.circumradius();
  const double d = distance(p1.center(), p2.center());
  return d >= std::fabs(r1 - r2) - tol.bound(std::max(r1, r2)) &&
         d <= (r1 + r2) + tol.bound(r1 + r2);
}

std::vector<PlanePoint> candidate_centers(const RegularPolygon& p1, const RegularPolygon& p2,
                                          const Tolerance& tol) {
  const auto aux = auxiliary_circles(p1, p2);
  try {
    return circle_circle_intersection(aux[0].center, aux[0].radius, aux[1].center,
                                      aux[1].radius, tol);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::CoincidentCircles) throw;
    throw GeometryError(ErrorCode::CoincidentAuxiliaryCircles,
                        "concentric polygons with equal circumradius: every point at that "
                        "distance from the center is a solution (degenerate continuum)");
  }
}

std::vector<RegularPolygon> align_second_polygon(const RegularPolygon& p1,
                                                 const RegularPolygon& p2, PlanePoint m_point,
                                                 int ref_vertex, const Tolerance& tol) {
  require_same_order(p1, p2);
  if (ref_vertex < 0 || ref_vertex >= p1.n()) {
    throw GeometryError(ErrorCode::InvalidArgument, "reference vertex index out of range");
  }
  const double r1 = p1.circumradius();
  const double r2 = p2.circumradius();
  const double to_center = distance(m_point, p2.center());
  if (!tol.close(to_center, r1, configuration_scale(p1, p2))) {
    throw GeometryError(ErrorCode::NotACandidateCenter,
                        "point lies at distance " + std::to_string(to_center) +
                            " from the second center, expected " + std::to_string(r1));
  }
  // A point polygon, or M at the second center: every phase gives the same distances.
  if (r2 <= tol.bound(r1) || to_center <= tol.bound(r2)) return {p2};

  const double target = distance(m_point, p1.vertex(ref_vertex));
  const double cos_alpha = std::clamp(
      (to_center * to_center + r2 * r2 - target * target) / (2.0 * to_center * r2), -1.0, 1.0);
  const double alpha = std::acos(cos_alpha);
  const PlanePoint towards_m = m_point - p2.center();
  const double bearing = std::atan2(towards_m.y, towards_m.x);

  // the mirror solutions move vertex 0 by a chord of 2 r2 sin(alpha)
  if (2.0 * r2 * std::sin(alpha) <= tol.bound(r2)) return {p2.rephased(bearing + alpha)};
  return {p2.rephased(bearing + alpha), p2.rephased(bearing - alpha)};
}

int nearest_vertex(const RegularPolygon& poly, PlanePoint point) {
  int best = 0;
  double best_distance = distance(point, poly.vertex(0));
  for (int k = 1; k < poly.n(); ++k) {
    const double d = distance(point, poly.vertex(k));
    if (d < best_distance) {
      best = k;
      best_distance = d;
    }
  }
  return best;
}

PairingReport pair_polygons(const RegularPolygon& p1, const RegularPolygon& p2,
                            const Tolerance& tol) {
  require_same_order(p1, p2);
  PairingReport report;
  const double scale = configuration_scale(p1, p2);

  for (const PlanePoint m : candidate_centers(p1, p2, tol)) {
    const int ref = nearest_vertex(p1, m);
    const double target = distance(m, p1.vertex(ref));
    const std::vector<double> first = distance_multiset(p1, m);

    for (const RegularPolygon& aligned : align_second_polygon(p1, p2, m, ref, tol)) {
      const std::vector<double> second = distance_multiset(aligned, m);
      if (!multiset_close(first, second, tol)) {
        report.diagnostics.push_back("multiset mismatch after alignment at M=(" +
                                     std::to_string(m.x) + ", " + std::to_string(m.y) +
                                     "), gap " + std::to_string(multiset_gap(first, second)));
        continue;
      }
      const bool duplicate =
          std::any_of(report.results.begin(), report.results.end(), [&](const PairingResult& r) {
            return distance(r.m_point, m) <= tol.bound(scale) &&
                   multiset_close(r.circles.radii(), first, tol) &&
                   same_polygon(r.aligned_second, aligned, tol);
          });
      if (duplicate) continue;

      int matched = 0;
      double matched_gap = std::fabs(distance(m, aligned.vertex(0)) - target);
      for (int k = 1; k < aligned.n(); ++k) {
        const double gap = std::fabs(distance(m, aligned.vertex(k)) - target);
        if (gap < matched_gap) {
          matched = k;
          matched_gap = gap;
        }
      }
      report.results.push_back(PairingResult{m, aligned, CircleFamily(m, first), {ref, matched}});
    }
  }
  return report;
}

PairingReport shared_vertex_pairing(const RegularPolygon& p1, const RegularPolygon& p2,
                                    const Tolerance& tol) {
  require_same_order(p1, p2);
  const double scale = configuration_scale(p1, p2);
  bool shared = false;
  for (int i = 0; i < p1.n() && !shared; ++i) {
    for (int j = 0; j < p2.n() && !shared; ++j) {
      shared = distance(p1.vertex(i), p2.vertex(j)) <= tol.bound(scale);
    }
  }
  if (!shared) {
    throw GeometryError(ErrorCode::NoSharedVertex, "the polygons have no coincident vertex");
  }
  return pair_polygons(p1, p2, tol);
}

}  // namespace concentric
