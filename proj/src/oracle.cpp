#include "concentric/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace concentric {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

void require_order(int n, int m) {
  if (m < 1 || m > n - 1) {
    throw GeometryError(ErrorCode::InvalidMomentOrder,
                        "moment order m=" + std::to_string(m) + " outside 1.." +
                            std::to_string(n - 1));
  }
}

// n [(R²+L²)^m + Σ_k C(m,2k) C(2k,k) (RL)^(2k) (R²+L²)^(m-2k)], with its own
// Pascal's triangle so it stays independent of the moments module.
long double closed_form_power_sum(int n, long double r_sq, long double l_sq, int m) {
  std::vector<std::vector<long double>> pascal(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    pascal[i].assign(static_cast<std::size_t>(i) + 1, 1.0L);
    for (int j = 1; j < i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
  }
  const long double base = r_sq + l_sq;
  long double bracket = std::pow(base, m);
  for (int k = 1; 2 * k <= m; ++k) {
    bracket += pascal[m][2 * k] * pascal[2 * k][k] * std::pow(r_sq * l_sq, k) *
               std::pow(base, m - 2 * k);
  }
  return n * bracket;
}

double relative_gap(long double lhs, long double rhs) {
  if (rhs == 0.0L) return static_cast<double>(std::fabs(lhs));
  return static_cast<double>(std::fabs(lhs - rhs) / rhs);
}

}  // namespace

double distance_identity_residual(const RegularPolygon& poly, PlanePoint m_point, int m) {
  const int n = poly.n();
  require_order(n, m);
  long double lhs = 0.0L;
  for (const PlanePoint v : vertices(poly)) {
    const long double dx = static_cast<long double>(v.x) - m_point.x;
    const long double dy = static_cast<long double>(v.y) - m_point.y;
    lhs += std::pow(dx * dx + dy * dy, m);
  }
  const long double dx = static_cast<long double>(m_point.x) - poly.center().x;
  const long double dy = static_cast<long double>(m_point.y) - poly.center().y;
  const long double r = poly.circumradius();
  return relative_gap(lhs, closed_form_power_sum(n, r * r, dx * dx + dy * dy, m));
}

double power_sum_residual(std::span<const double> distances, double circumradius,
                          double center_distance, int m) {
  const int n = static_cast<int>(distances.size());
  require_order(n, m);
  long double lhs = 0.0L;
  for (double d : distances) lhs += std::pow(static_cast<long double>(d) * d, m);
  const long double r = circumradius;
  const long double l = center_distance;
  return relative_gap(lhs, closed_form_power_sum(n, r * r, l * l, m));
}

SweepResult angle_sweep(double r, double l, int n, std::span<const double> target,
                        int grid_size, int refine_iterations) {
  if (grid_size < 360) {
    throw GeometryError(ErrorCode::InvalidArgument, "angle sweep grid must have >= 360 cells");
  }
  if (static_cast<int>(target.size()) != n) {
    throw GeometryError(ErrorCode::MismatchedOrder, "target size differs from polygon order");
  }
  const double period = kTwoPi / n;
  const double cell = period / grid_size;
  const PlanePoint center{l, 0.0};
  auto residual = [&](double phase) {
    return multiset_gap(distance_multiset(RegularPolygon(n, center, r, phase), {}), target);
  };

  SweepResult best{0.0, residual(0.0)};
  for (int j = 1; j < grid_size; ++j) {
    const double value = residual(j * cell);
    if (value < best.best_residual) best = {j * cell, value};
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best.best_phase - cell;
  double hi = best.best_phase + cell;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = residual(x1);
  double f2 = residual(x2);
  for (int it = 0; it < refine_iterations; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = residual(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = residual(x2);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double f_mid = residual(mid);
  if (f_mid < best.best_residual) best = {mid, f_mid};

  best.best_phase = std::fmod(normalize_angle(best.best_phase), period);
  return best;
}

RandomInstance random_instance(int n, std::uint64_t seed, bool point_second) {
  if (n < 3) throw GeometryError(ErrorCode::InvalidArgument, "n must be >= 3");
  SplitMix64 rng(seed);
  const double r1 = rng.uniform(0.1, 10.0);
  double r2 = rng.uniform(0.1, 10.0);
  if (point_second) r2 = 0.0;
  const PlanePoint m{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
  const double bearing1 = rng.uniform(0.0, kTwoPi);
  const double bearing2 = rng.uniform(0.0, kTwoPi);
  const double phase1 = rng.uniform(0.0, kTwoPi);
  const double mirror = (rng.next() & 1U) != 0U ? -1.0 : 1.0;

  // the center→M directions are bearing + π
  const RegularPolygon first(n, m + polar(r2, bearing1), r1, phase1);
  const double offset = phase1 - (bearing1 + std::numbers::pi);
  const RegularPolygon second(n, m + polar(r1, bearing2), r2,
                              bearing2 + std::numbers::pi + mirror * offset);
  return RandomInstance{first, second, m, CircleFamily(m, distance_multiset(first, m)), r1, r2};
}

}  // namespace concentric
