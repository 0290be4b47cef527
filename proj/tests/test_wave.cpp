#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dpwave/wave.hpp"

using namespace dpwave;

namespace {

// independent bisection oracle on a sign-changing function
template <class F>
double bisect_oracle(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("critical points: degenerate, small-a, and exact-value cases") {
  {
    const double a = 27.0 / 256.0 * (1.0 - 1e-13);
    CriticalPoints cp = critical_points(1.0, a);
    CHECK(std::fabs(cp.phi1 - 0.25) < 1e-6);
    CHECK(std::fabs(cp.phi2 - 0.25) < 1e-6);
  }
  {
    // phi1 ~ a/c^3 and 1 - phi2 ~ (a/c)^{1/3} as a -> 0
    CriticalPoints cp = critical_points(1.0, 1e-12);
    CHECK(cp.phi1 < 1e-10);
    CHECK(std::fabs(cp.phi2 - 1.0) < 2e-4);
  }
  {
    CriticalPoints cp = critical_points(1.0, 1.0 / 16.0);
    CHECK(cp.phi2 == doctest::Approx(0.5).epsilon(1e-12));
    const double phi1_oracle =
        bisect_oracle([](double p) { return p * std::pow(1 - p, 3) - 1.0 / 16.0; }, 0.0, 0.25);
    CHECK(cp.phi1 == doctest::Approx(phi1_oracle).epsilon(1e-11));
  }
  CHECK_THROWS_AS(critical_points(1.0, 0.2), Error);
  CHECK_THROWS_AS(critical_points(1.0, -0.1), Error);
}

TEST_CASE("region boundaries") {
  {
    RegionBounds rb = region_boundaries(1.0, 0.0);
    CHECK(rb.a_low == 0.0);
    CHECK(rb.a_high == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  }
  {
    RegionBounds rb = region_boundaries(1.0, 0.125 - 1e-12);
    CHECK(rb.a_low == doctest::Approx(27.0 / 256.0).epsilon(1e-5));
    CHECK(rb.a_high == doctest::Approx(27.0 / 256.0).epsilon(1e-5));
  }
  {
    RegionBounds rb = region_boundaries(1.0, -1.0 + 1e-12);
    CHECK(rb.a_high < 1e-10);
  }
  CHECK_THROWS_AS(region_boundaries(1.0, 0.2), Error);
}

TEST_CASE("contains") {
  CHECK(contains({1.0, 0.04, 0.0}));
  CHECK(!contains({1.0, 0.2, 0.0}));
  CHECK(contains({1.0, 0.001, -0.3}));
  // scaling covariance of membership
  CHECK(contains({2.0, 0.04 * 16.0, 0.0}));
}

TEST_CASE("turning points against a bisection oracle") {
  WaveParams p{1.0, 0.04, 0.0};
  TurningPoints tp = turning_points(p);
  CriticalPoints cp = critical_points(p.c, p.a);
  // phi1 < phi_minus < phi2 < phi_plus < c; here Q factors as
  // ((1-phi) phi)^2 - 0.04, so the turning points are exactly the roots
  // of phi^2 - phi + 1/5
  CHECK(cp.phi1 < tp.phi_minus);
  CHECK(tp.phi_minus < cp.phi2);
  CHECK(tp.phi_plus > cp.phi2);
  CHECK(tp.phi_plus < 1.0);
  CHECK(tp.phi_minus == doctest::Approx(0.5 - 0.5 * std::sqrt(0.2)).epsilon(1e-12));
  CHECK(tp.phi_plus == doctest::Approx(0.5 + 0.5 * std::sqrt(0.2)).epsilon(1e-12));

  auto Q = [&](double phi) { return wave_Q(p, phi); };
  const double lo_oracle = bisect_oracle(Q, cp.phi1, cp.phi2);
  const double hi_oracle = bisect_oracle(Q, cp.phi2, 1.0);
  CHECK(tp.phi_minus == doctest::Approx(lo_oracle).epsilon(1e-11));
  CHECK(tp.phi_plus == doctest::Approx(hi_oracle).epsilon(1e-11));

  CHECK(std::fabs(wave_Q(p, tp.phi_minus)) < 1e-12);
  CHECK(std::fabs(wave_Q(p, tp.phi_plus)) < 1e-12);

  // Q = (phi - phi_minus)(phi_plus - phi) q and q > 0 on a 1000-point scan
  for (int i = 0; i <= 1000; ++i) {
    const double phi = tp.phi_minus + (tp.phi_plus - tp.phi_minus) * i / 1000.0;
    CHECK(tp.q(phi) > 0.0);
    const double lhs = wave_Q(p, phi);
    const double rhs = (phi - tp.phi_minus) * (tp.phi_plus - phi) * tp.q(phi);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    if (i > 0 && i < 1000) CHECK(lhs > 0.0);
  }
}

TEST_CASE("turning points: degenerate and homoclinic limits") {
  const double a = 0.04;
  const double bm = b_minus_of_a(1.0, a);
  const double bp = b_plus_of_a(1.0, a);
  {
    const double eps = 1e-8;
    TurningPoints tp = turning_points({1.0, a, bm + eps});
    const double phi2 = critical_points(1.0, a).phi2;
    CHECK(std::fabs(tp.phi_minus - phi2) < 1e-3);
    CHECK(std::fabs(tp.phi_plus - phi2) < 1e-3);
  }
  {
    TurningPoints tp = turning_points({1.0, a, bp - 1e-11});
    const double phi1 = critical_points(1.0, a).phi1;
    CHECK(std::fabs(tp.phi_minus - phi1) < 1e-4);
  }
  CHECK_THROWS_AS(turning_points({1.0, a, bm + 1e-14}), Error);
}

TEST_CASE("peaked limit") {
  const double s = 1.0 / std::cosh(1.0);
  CHECK(peaked_limit(1.0, 2.0) == doctest::Approx(-s * s).epsilon(1e-15));
  CHECK(std::fabs(peaked_limit(1.0, 200.0)) < 1e-80);
  CHECK(peaked_limit(1.0, 1e-8) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("profile: symmetry, residual, turning values") {
  WaveParams p{1.0, 0.04, 0.0};
  WaveProfile wp = profile(p, 256);
  TurningPoints tp = turning_points(p);

  CHECK(wp.invariant_residual <= 1e-9);
  CHECK(wp.phi[0] == doctest::Approx(tp.phi_plus).epsilon(1e-12));
  CHECK(std::fabs(wp.dphi[0]) < 1e-12);
  CHECK(wp.phi[wp.n / 2] == doctest::Approx(tp.phi_minus).epsilon(1e-8));
  double mx = -1e30, mn = 1e30;
  for (double v : wp.phi) {
    mx = std::fmax(mx, v);
    mn = std::fmin(mn, v);
  }
  CHECK(mx == doctest::Approx(tp.phi_plus).epsilon(1e-10));
  CHECK(mx < 1.0);
  CHECK(mn >= tp.phi_minus - 1e-10);
  CHECK(mn > critical_points(1.0, 0.04).phi1);
  // even symmetry
  for (int i = 1; i < wp.n / 2; ++i) {
    CHECK(wp.phi[i] == doctest::Approx(wp.phi[wp.n - i]).epsilon(1e-12));
    CHECK(wp.dphi[i] == doctest::Approx(-wp.dphi[wp.n - i]).epsilon(1e-10));
  }
  // nu from the closed form
  for (int i = 0; i < wp.n; i += 37) {
    const double nu = wp.phi[i] / 3.0 - wp.phi[i] * wp.phi[i] / 6.0 - 0.0 / 12.0;
    CHECK(wp.nu[i] == doctest::Approx(nu).epsilon(1e-14));
  }
}

TEST_CASE("profile: scaling covariance") {
  WaveProfile base = profile({1.0, 0.04, 0.0}, 128);
  WaveProfile scaled = profile({2.0, 0.04 * 16.0, 0.0}, 128);
  CHECK(scaled.L == doctest::Approx(base.L).epsilon(1e-10));
  for (int i = 0; i < base.n; ++i)
    CHECK(scaled.phi[i] == doctest::Approx(2.0 * base.phi[i]).epsilon(1e-9));
}

TEST_CASE("profile: near-degenerate parameters are rejected, not garbage") {
  const double a = 0.04;
  const double bm = b_minus_of_a(1.0, a);
  CHECK_THROWS_AS(profile({1.0, a, bm + 1e-14}, 64), Error);
  CHECK_THROWS_AS(profile({1.0, a, 0.0}, 63), Error);
  CHECK_THROWS_AS(profile({1.0, a, 0.0}, 32), Error);
}
