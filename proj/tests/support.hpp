#pragma once

// Test-side reference values computed without the library.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace testref {

inline constexpr double pi = std::numbers::pi;

// Distances from a point at distance l from the center of a regular n-gon of
// circumradius r, with the point at bearing `bearing` and vertex 0 at `phase`.
// Law of cosines per vertex.
inline std::vector<double> cosine_distances(int n, double r, double l, double bearing,
                                            double phase) {
  std::vector<double> d;
  for (int k = 0; k < n; ++k) {
    const double gap = phase + 2.0 * pi * k / n - bearing;
    d.push_back(std::sqrt(std::max(0.0, r * r + l * l - 2.0 * r * l * std::cos(gap))));
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Area via 16Δ² = 2(a²b² + b²c² + c²a²) - a⁴ - b⁴ - c⁴.
inline double area_from_squares(double a, double b, double c) {
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double s = 2.0 * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2;
  return std::sqrt(std::max(0.0, s)) / 4.0;
}

// Σ d^(2m), summed directly in long double.
inline long double power_sum(const std::vector<double>& d, int m) {
  long double s = 0.0L;
  for (double v : d) s += std::pow(static_cast<long double>(v) * v, m);
  return s;
}

inline long double binomial(int n, int k) {
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// The worked families: M at 30° and distance 1 from polygons of circumradius 2.
inline std::vector<double> worked_triangle() {
  return {std::sqrt(5.0 - 2.0 * std::sqrt(3.0)), std::sqrt(5.0), std::sqrt(5.0 + 2.0 * std::sqrt(3.0))};
}

inline std::vector<double> worked_square() {
  return {std::sqrt(5.0 - 2.0 * std::sqrt(3.0)), std::sqrt(3.0), std::sqrt(7.0),
          std::sqrt(5.0 + 2.0 * std::sqrt(3.0))};
}

}  // namespace testref
