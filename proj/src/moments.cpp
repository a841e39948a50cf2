#include "concentric/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace concentric {

namespace {

__extension__ typedef unsigned __int128 wide_uint;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

wide_uint checked_mul(wide_uint a, wide_uint b) {
  wide_uint out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw GeometryError(ErrorCode::InvalidArgument, "moment coefficient exceeds 128-bit range");
  }
  return out;
}

wide_uint binomial(int n, int k) {
  wide_uint c = 1;
  for (int i = 0; i < k; ++i) {
    c = checked_mul(c, static_cast<wide_uint>(n - i)) / static_cast<wide_uint>(i + 1);
  }
  return c;
}

void require_order(int n, int m) {
  if (m < 1 || m > n - 1) {
    throw GeometryError(ErrorCode::InvalidMomentOrder,
                        "moment order m=" + std::to_string(m) + " outside 1.." +
                            std::to_string(n - 1));
  }
}

// Clamped variance-like term S^(4) - (S^(2))², equal to 2 r1² r2².
double spread_term(const CyclicAverages& av, const Tolerance& tol) {
  const double s2 = av.at(1);
  const double s4 = av.at(2);
  double spread = s4 - s2 * s2;
  if (spread < 0.0 && spread >= -tol.bound(s4)) spread = 0.0;
  return spread;
}

}  // namespace

CircleFamily::CircleFamily(PlanePoint center, std::vector<double> radii)
    : center_(center), radii_(std::move(radii)) {
  if (radii_.size() < 3) {
    throw GeometryError(ErrorCode::InvalidArgument, "a circle family needs at least 3 radii");
  }
  if (!std::isfinite(center_.x) || !std::isfinite(center_.y)) {
    throw GeometryError(ErrorCode::InvalidArgument, "family center must be finite");
  }
  for (double r : radii_) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw GeometryError(ErrorCode::InvalidArgument, "radii must be finite and >= 0");
    }
  }
  if (!std::is_sorted(radii_.begin(), radii_.end())) {
    throw GeometryError(ErrorCode::UnsortedRadii, "radii must be sorted ascending");
  }
}

CircleFamily CircleFamily::from_unsorted(PlanePoint center, std::vector<double> radii,
                                         bool* reordered) {
  const bool sorted = std::is_sorted(radii.begin(), radii.end());
  if (!sorted) std::sort(radii.begin(), radii.end());
  if (reordered != nullptr) *reordered = !sorted;
  return {center, std::move(radii)};
}

CyclicAverages cyclic_averages(std::span<const double> radii) {
  const int n = static_cast<int>(radii.size());
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "need at least 3 radii");
  CyclicAverages av;
  av.n = n;
  av.values.reserve(static_cast<std::size_t>(n - 1));
  for (int m = 1; m < n; ++m) {
    CompensatedSum sum;
    for (double d : radii) sum.add(std::pow(d * d, m));
    av.values.push_back(sum.value() / n);
  }
  return av;
}

CyclicAverages cyclic_averages(const CircleFamily& family) {
  return cyclic_averages(std::span<const double>(family.radii()));
}

double moment_coefficient(int m, int k) {
  if (m < 0 || k < 0 || 2 * k > m) {
    throw GeometryError(ErrorCode::InvalidArgument, "coefficient index out of range");
  }
  const wide_uint c = checked_mul(binomial(m, 2 * k), binomial(2 * k, k));
  return static_cast<double>(static_cast<long double>(c));
}

double two_radius_power_sum(double r1, double r2, int n, int m) {
  require_order(n, m);
  if (!(r1 >= 0.0 && r2 >= 0.0)) {
    throw GeometryError(ErrorCode::InvalidArgument, "circumradii must be non-negative");
  }
  const double base = r1 * r1 + r2 * r2;
  const double cross = (r1 * r2) * (r1 * r2);
  CompensatedSum sum;
  sum.add(std::pow(base, m));
  for (int k = 1; 2 * k <= m; ++k) {
    sum.add(moment_coefficient(m, k) * std::pow(cross, k) * std::pow(base, m - 2 * k));
  }
  return n * sum.value();
}

ConditionOne condition_one(const CyclicAverages& av, const Tolerance& tol) {
  const double s2 = av.at(1);
  const double s4 = av.at(2);
  ConditionOne out;
  // all radii zero: both polygons collapse onto the center
  out.ratio = s4 > 0.0 ? (s2 * s2) / s4 : 1.0;
  out.ok = out.ratio >= 2.0 / 3.0 - tol.relative_eps && out.ratio <= 1.0 + tol.relative_eps;
  return out;
}

ConditionTwo condition_two(const CyclicAverages& av, const Tolerance& tol) {
  ConditionTwo out;
  out.ok = true;
  const double s2 = av.at(1);
  const double spread = spread_term(av, tol);
  for (int m = 3; m < av.n; ++m) {
    CompensatedSum rhs;
    rhs.add(std::pow(s2, m));
    for (int k = 1; 2 * k <= m; ++k) {
      rhs.add(moment_coefficient(m, k) * std::pow(0.5 * spread, k) * std::pow(s2, m - 2 * k));
    }
    const double sm = av.at(m);
    const double residual = std::fabs(sm - rhs.value()) / std::fmax(1.0, sm);
    out.residuals.push_back(residual);
    if (!(residual <= tol.relative_eps + tol.absolute_floor)) out.ok = false;
  }
  return out;
}

namespace {

RadiiPair recover(const CyclicAverages& av, const Tolerance& tol, bool clamp_everything) {
  const double s2 = av.at(1);
  const double s4 = av.at(2);
  const double disc = 3.0 * s2 * s2 - 2.0 * s4;
  // same band as condition one's 2/3 boundary, mapped onto the discriminant
  const double disc_tol = 3.0 * tol.relative_eps * std::fmax(1.0, s4) + tol.absolute_floor;
  if (disc < -disc_tol && !clamp_everything) {
    throw GeometryError(ErrorCode::InfeasibleMoments,
                        "negative discriminant 3(S2)^2 - 2 S4 = " + std::to_string(disc));
  }
  RadiiPair out;
  out.degenerate = disc <= disc_tol;
  const double root = std::sqrt(std::max(disc, 0.0));
  double r1_sq = 0.5 * (s2 + root);
  double r2_sq = 0.5 * (s2 - root);
  if (r2_sq < 0.0) {
    if (r2_sq < -tol.bound(s2) && !clamp_everything) {
      throw GeometryError(ErrorCode::InfeasibleMoments,
                          "second circumradius squared is negative: " + std::to_string(r2_sq));
    }
    r2_sq = 0.0;
  }
  r1_sq = std::max(r1_sq, 0.0);
  out.r1 = std::sqrt(r1_sq);
  out.r2 = std::sqrt(r2_sq);
  return out;
}

}  // namespace

RadiiPair recover_circumradii(const CyclicAverages& av, const Tolerance& tol) {
  return recover(av, tol, false);
}

RadiiPair recover_circumradii_clamped(const CyclicAverages& av, const Tolerance& tol) {
  return recover(av, tol, true);
}

FeasibilityReport assess_feasibility(const CyclicAverages& av, const Tolerance& tol) {
  FeasibilityReport report;
  const ConditionOne one = condition_one(av, tol);
  ConditionTwo two = condition_two(av, tol);
  report.condition1_ok = one.ok;
  report.condition1_ratio = one.ratio;
  report.condition2_ok = two.ok;
  report.condition2_residuals = std::move(two.residuals);
  report.degenerate_single_polygon = one.ok && recover_circumradii_clamped(av, tol).degenerate;
  return report;
}

}  // namespace concentric
