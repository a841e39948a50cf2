#pragma once

#include <cstdint>
#include <span>

#include "concentric/geom.hpp"
#include "concentric/moments.hpp"

namespace concentric {

/// SplitMix64 (Steele, Lea, Flood 2014). The recurrence is fixed so seeded
/// instances reproduce bit-for-bit in any language:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
/// uniform01() uses the top 53 bits: (z >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

/// Relative gap between Σ d_i^(2m), summed directly over the vertices, and
/// the closed form in R and L = |M - center|. Throws InvalidMomentOrder.
double distance_identity_residual(const RegularPolygon& poly, PlanePoint m_point, int m);

/// Same relative gap for a claimed list of vertex distances (for instance a
/// circle family's radii) against a polygon of circumradius R whose center
/// lies at distance L from the measuring point.
double power_sum_residual(std::span<const double> distances, double circumradius,
                          double center_distance, int m);

struct SweepResult {
  double best_phase = 0.0;  // in [0, 2π/n)
  double best_residual = 0.0;
};

/// Brute-force phase search for a polygon of circumradius r whose center sits
/// l along +x from the origin M. Scans a uniform grid over one period 2π/n,
/// then golden-section refines around the best cell. Throws InvalidArgument
/// when grid_size < 360.
SweepResult angle_sweep(double r, double l, int n, std::span<const double> target,
                        int grid_size = 3600, int refine_iterations = 40);

struct RandomInstance {
  RegularPolygon first;
  RegularPolygon second;
  PlanePoint m_point;
  CircleFamily family;
  double r1 = 0.0;  // generating circumradius of `first`
  double r2 = 0.0;  // generating circumradius of `second`
};

/// Seeded polygon pair sharing the distance multiset `family` from `m_point`:
/// r1, r2 uniform in [0.1, 10], M uniform in [-5, 5]², centers placed at
/// |M - O1| = r2 and |M - O2| = r1, second phase chosen to mirror or copy the
/// first polygon's offset. `point_second` forces r2 = 0.
RandomInstance random_instance(int n, std::uint64_t seed, bool point_second = false);

}  // namespace concentric
