#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "concentric/oracle.hpp"
#include "concentric/reconstruct.hpp"
#include "support.hpp"

using namespace concentric;
using doctest::Approx;

TEST_CASE("splitmix64 reference stream") {
  // first outputs for seed 0, matching the published reference implementation
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  SplitMix64 a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SplitMix64 u(7);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform01();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("power-sum identity examples") {
  const RegularPolygon sq(4, {0, 0}, 2.0, 0.0);
  const PlanePoint m = polar(1.0, testref::pi / 6);
  CHECK(distance_identity_residual(sq, m, 3) <= 1e-12);
  CHECK(static_cast<double>(testref::power_sum(distance_multiset(sq, m), 3)) == Approx(980.0));

  const RegularPolygon hept(7, {1, -2}, 1.7, 0.3);
  for (int k = 1; k < 7; ++k) CHECK(distance_identity_residual(hept, hept.center(), k) <= 1e-15);

  const RegularPolygon tri(3, {0, 0}, 1.0, 0.0);
  CHECK(distance_identity_residual(tri, {-1, 0}, 2) <= 1e-15);
  CHECK(static_cast<double>(testref::power_sum(distance_multiset(tri, {-1, 0}), 2)) == Approx(18.0));

  try {
    distance_identity_residual(tri, {0, 0}, 3);
    FAIL("order 3 accepted for a triangle");
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::InvalidMomentOrder);
  }
  CHECK_THROWS_AS(distance_identity_residual(tri, {0, 0}, 0), GeometryError);
}

TEST_CASE("power-sum identity on random triples") {
  SplitMix64 rng(89);
  for (int n = 3; n <= 12; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const RegularPolygon p(n, {rng.uniform(-5, 5), rng.uniform(-5, 5)}, rng.uniform(0.1, 5),
                             rng.uniform(0, kTwoPi));
      const PlanePoint m{rng.uniform(-8, 8), rng.uniform(-8, 8)};
      const int k = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
      CHECK(distance_identity_residual(p, m, k) <= 1e-10);
    }
  }
  // a wrong distance list is caught at some order
  const std::vector<double> off{1.0, 1.1, 2.3};
  CHECK(power_sum_residual(off, 1.0, 0.5, 1) > 1e-3);
  const auto good = testref::cosine_distances(5, 2.0, 1.0, 0.4, 1.3);
  for (int k = 1; k < 5; ++k) CHECK(power_sum_residual(good, 2.0, 1.0, k) <= 1e-12);
}

TEST_CASE("angle sweep finds the worked phase") {
  const auto target = testref::worked_triangle();
  const SweepResult res = angle_sweep(2, 1, 3, target);
  CHECK(res.best_residual <= 1e-8);
  const double period = kTwoPi / 3;
  CHECK(res.best_phase >= 0.0);
  CHECK(res.best_phase < period);
  // the polygon sits at +x from M, so vertex k points at angle phase + 2πk/3 and
  // the vertex nearest M makes angle ±π/6 with the -x direction
  const double a = std::fmod(testref::pi + testref::pi / 6, period);
  const double b = std::fmod(testref::pi - testref::pi / 6, period);
  auto gap = [&](double x, double y) {
    const double g = std::fmod(std::fabs(x - y), period);
    return std::min(g, period - g);
  };
  CHECK(std::min(gap(res.best_phase, a), gap(res.best_phase, b)) <= 1e-6);
  // agrees with the candidates from the law of cosines
  const auto cands = phase_candidates(2, 1, target[0]);
  REQUIRE(cands.size() == 2);
}

TEST_CASE("angle sweep recovers a known phase") {
  const double truth = 0.37;
  const auto target = distance_multiset(RegularPolygon(4, {0.5, 0}, 1.0, truth), {0, 0});
  const SweepResult res = angle_sweep(1.0, 0.5, 4, target);
  CHECK(res.best_residual <= 1e-10);
  const double period = kTwoPi / 4;
  const double g = std::fmod(std::fabs(res.best_phase - truth), period);
  // the mirror phase -truth gives the same multiset
  const double mirror = std::fmod(std::fabs(res.best_phase - (period - truth)), period);
  CHECK(std::min({g, period - g, mirror, period - mirror}) <= 1e-6);
}

TEST_CASE("angle sweep stays away from unreachable targets") {
  const std::vector<double> target{1, 2, 3, 4};
  const RadiiPair r = recover_circumradii_clamped(cyclic_averages(target));
  CHECK(angle_sweep(r.r1, r.r2, 4, target).best_residual > 0.01);
  CHECK(angle_sweep(r.r2, r.r1, 4, target).best_residual > 0.01);
  CHECK_THROWS_AS(angle_sweep(1, 1, 4, target, 100), GeometryError);
  CHECK_THROWS_AS(angle_sweep(1, 1, 3, target), GeometryError);
}

TEST_CASE("angle sweep is deterministic and agrees with reconstruction") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const RandomInstance inst = random_instance(n, seed);
    const Reconstruction rec = reconstruct_polygons(inst.family);
    const auto& target = inst.family.radii();
    const SweepResult a = angle_sweep(rec.radii.r1, rec.radii.r2, n, target);
    const SweepResult b = angle_sweep(rec.radii.r1, rec.radii.r2, n, target);
    CHECK(a.best_phase == b.best_phase);
    CHECK(a.best_residual == b.best_residual);
    CHECK(std::fabs(a.best_residual - rec.first_residual) <= 1e-6);
    const SweepResult s = angle_sweep(rec.radii.r2, rec.radii.r1, n, target);
    CHECK(std::fabs(s.best_residual - rec.second_residual) <= 1e-6);
  }
}

TEST_CASE("random instances") {
  const RandomInstance tri = random_instance(3, 1);
  CHECK(assess_feasibility(cyclic_averages(tri.family)).feasible());

  const RandomInstance sq = random_instance(4, 2);
  const auto& d = sq.family.radii();
  CHECK(std::fabs(d[0] * d[0] + d[3] * d[3] - d[1] * d[1] - d[2] * d[2]) <= 1e-10 * d[3] * d[3]);

  const RandomInstance pt = random_instance(6, 5, true);
  CHECK(pt.r2 == 0.0);
  for (double v : pt.family.radii()) CHECK(v == Approx(pt.r1).epsilon(1e-12));

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const RandomInstance inst = random_instance(n, seed);
    CHECK(inst.r1 >= 0.1);
    CHECK(inst.r1 <= 10.0);
    CHECK(inst.r2 >= 0.1);
    CHECK(inst.r2 <= 10.0);
    // placement: |M - O1| = R2, |M - O2| = R1
    CHECK(std::fabs(distance(inst.m_point, inst.first.center()) - inst.r2) <= 1e-12 * 10);
    CHECK(std::fabs(distance(inst.m_point, inst.second.center()) - inst.r1) <= 1e-12 * 10);
    CHECK(multiset_gap(distance_multiset(inst.second, inst.m_point), inst.family.radii()) <= 1e-11);
    const auto av = cyclic_averages(inst.family);
    CHECK(assess_feasibility(av).feasible());
    const RadiiPair r = recover_circumradii_clamped(av);
    const double hi = std::max(inst.r1, inst.r2), lo = std::min(inst.r1, inst.r2);
    CHECK(std::fabs(r.r1 - hi) <= 1e-8 * hi);
    CHECK(std::fabs(r.r2 - lo) <= 1e-8 * hi);
  }
  // same seed, same instance
  const RandomInstance x = random_instance(5, 42), y = random_instance(5, 42);
  CHECK(x.family.radii() == y.family.radii());
  CHECK(x.second.phase() == y.second.phase());
}
