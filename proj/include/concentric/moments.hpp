#pragma once

#include <span>
#include <utility>
#include <vector>

#include "concentric/geom.hpp"

namespace concentric {

/// Largest vertex count accepted by default. Moments grow like d^(2(n-1)),
/// so families with radii far from 1 should be prescaled to geometric mean 1.
inline constexpr int kDefaultMaxOrder = 64;

/// n concentric circles: a common center and ascending radii.
class CircleFamily {
 public:
  /// Throws UnsortedRadii when radii are not ascending.
  CircleFamily(PlanePoint center, std::vector<double> radii);

  /// Sorts the radii first; `reordered` reports whether the input order differed.
  static CircleFamily from_unsorted(PlanePoint center, std::vector<double> radii,
                                    bool* reordered = nullptr);

  PlanePoint center() const noexcept { return center_; }
  const std::vector<double>& radii() const noexcept { return radii_; }
  int size() const noexcept { return static_cast<int>(radii_.size()); }

  CircleFamily translated(PlanePoint offset) const { return {center_ + offset, radii_}; }

 private:
  PlanePoint center_;
  std::vector<double> radii_;
};

/// S^(2m) = (1/n) Σ d_i^(2m) for m = 1 … n-1.
struct CyclicAverages {
  int n = 0;
  std::vector<double> values;  // values[m - 1] holds S^(2m)

  double at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
};

CyclicAverages cyclic_averages(const CircleFamily& family);
CyclicAverages cyclic_averages(std::span<const double> radii);

/// C(m, 2k) · C(2k, k), exact. Throws InvalidArgument on 128-bit overflow.
double moment_coefficient(int m, int k);

/// n · [(r1²+r2²)^m + Σ_k C(m,2k) C(2k,k) (r1 r2)^(2k) (r1²+r2²)^(m-2k)].
double two_radius_power_sum(double r1, double r2, int n, int m);

struct ConditionOne {
  bool ok = false;
  double ratio = 0.0;  // (S^(2))² / S^(4)
};

struct ConditionTwo {
  bool ok = false;
  std::vector<double> residuals;  // one per m = 3 … n-1
};

struct RadiiPair {
  double r1 = 0.0;
  double r2 = 0.0;
  bool degenerate = false;
};

struct FeasibilityReport {
  bool condition1_ok = false;
  double condition1_ratio = 0.0;
  bool condition2_ok = false;
  std::vector<double> condition2_residuals;
  bool degenerate_single_polygon = false;

  bool feasible() const noexcept { return condition1_ok && condition2_ok; }
};

ConditionOne condition_one(const CyclicAverages& av, const Tolerance& tol = {});
ConditionTwo condition_two(const CyclicAverages& av, const Tolerance& tol = {});

/// Circumradii of the two polygons realizing the averages, r1 >= r2.
/// Throws InfeasibleMoments when the discriminant 3(S²)² - 2S⁴ or r2² is
/// negative beyond tolerance.
RadiiPair recover_circumradii(const CyclicAverages& av, const Tolerance& tol = {});

/// Same formula with every negative intermediate clamped to zero. Never
/// throws; used for diagnostics on infeasible families.
RadiiPair recover_circumradii_clamped(const CyclicAverages& av, const Tolerance& tol = {});

FeasibilityReport assess_feasibility(const CyclicAverages& av, const Tolerance& tol = {});

}  // namespace concentric
