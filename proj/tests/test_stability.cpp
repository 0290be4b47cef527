#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dpwave/periodfn.hpp"
#include "dpwave/stability.hpp"

using namespace dpwave;

TEST_CASE("a_max_for_period") {
  CHECK(a_max_for_period(1.0, M_PI * std::sqrt(2.0)) ==
        doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(a_max_for_period(1.0, 1e4) == doctest::Approx(27.0 / 256.0).epsilon(1e-5));
  CHECK(a_max_for_period(1.0, 1e-3) < 1e-8);
}

TEST_CASE("solve_b: defining equation, boundary limits") {
  const double L = M_PI;
  const double aL = a_max_for_period(1.0, L);
  for (double f : {0.2, 0.5, 0.9}) {
    const double a = f * aL;
    const double b = solve_b(1.0, L, a);
    CHECK(period({1.0, a, b}).L == doctest::Approx(L).epsilon(1e-9));
  }
  // a -> 0: b approaches the peaked-wave value
  {
    const double b = solve_b(1.0, L, 1e-7 * aL);
    CHECK(b == doctest::Approx(peaked_limit(1.0, L)).epsilon(1e-3));
  }
  // a -> a_L: b approaches the constant-wave boundary
  {
    const double a = aL * (1.0 - 1e-6);
    const double b = solve_b(1.0, L, a);
    CHECK(b == doctest::Approx(b_minus_of_a(1.0, a)).epsilon(1e-3));
  }
  CHECK_THROWS_AS(solve_b(1.0, L, aL * 1.01), Error);
}

TEST_CASE("functionals: constant-wave limit and grid cross-check") {
  // near the constant-wave boundary M ~ phi2 L and F ~ phi2^3 L / 6
  const double a = 0.04;
  const double bm = b_minus_of_a(1.0, a);
  WaveParams p{1.0, a, bm + 1e-7};
  Functionals f = functionals_quad(p);
  const double phi2 = critical_points(1.0, a).phi2;
  CHECK(f.M == doctest::Approx(phi2 * f.L).epsilon(1e-3));
  CHECK(f.F == doctest::Approx(phi2 * phi2 * phi2 * f.L / 6.0).epsilon(1e-3));

  // interior point: quadrature vs trapezoid sums on the sampled grid
  WaveParams q{1.0, 0.04, 0.0};
  Functionals fq = functionals_quad(q);
  Functionals fg = functionals_grid(profile(q, 512));
  CHECK(fq.M == doctest::Approx(fg.M).epsilon(1e-7));
  CHECK(fq.F == doctest::Approx(fg.F).epsilon(1e-7));
  CHECK(fq.L == doctest::Approx(period(q).L).epsilon(1e-10));
  // the Fourier energy diagnostic is positive and finite
  CHECK(energy_fourier(profile(q, 512)) > 0.0);
}

TEST_CASE("projection matrix: symmetry identity and the two det routes") {
  const double L = M_PI;
  const double aL = a_max_for_period(1.0, L);
  const double a = 0.6 * aL;
  ProjectionMatrix S = projection_matrix(1.0, L, a, 1e-4 * aL);
  // <L^{-1} 1, phi^2> = <L^{-1} phi^2, 1> (self-adjointness)
  CHECK(S.s12 == doctest::Approx(S.s21).epsilon(1e-5));
  // direct route through the cosine Fourier block
  const double b = solve_b(1.0, L, a);
  ProjectionMatrix Sd = projection_matrix_direct(profile({1.0, a, b}, 512), 100);
  CHECK(S.det == doctest::Approx(Sd.det).epsilon(0.05));
  CHECK(Sd.s12 == doctest::Approx(Sd.s21).epsilon(1e-6));
  CHECK(S.n0 == Sd.n0);
}

TEST_CASE("trace_curve: consistency, monotone diagnostics, stable verdicts") {
  FixedPeriodCurve curve = trace_curve(1.0, M_PI, 24);
  CHECK(curve.a_L == doctest::Approx(a_max_for_period(1.0, M_PI)).epsilon(1e-14));
  for (std::size_t j = 0; j < curve.samples.size(); ++j) {
    const CurveSample& s = curve.samples[j];
    CHECK(period({1.0, s.a, s.b}).L == doctest::Approx(M_PI).epsilon(1e-9));
    if (j > 0) CHECK(s.a > curve.samples[j - 1].a);
    if (j > 0) CHECK(s.r < curve.samples[j - 1].r);  // F/M^3 strictly decreasing
    if (j > 0) CHECK(s.M > curve.samples[j - 1].M);  // M strictly increasing
  }
  int conclusive = 0;
  for (const auto& s : curve.samples) {
    if (s.verdict != Verdict::inconclusive) {
      ++conclusive;
      CHECK(s.verdict == Verdict::stable);
    }
  }
  CHECK(conclusive >= int(curve.samples.size()) - 3);
  // det S changes sign exactly where B_L' changes sign
  for (std::size_t j = 0; j + 1 < curve.samples.size(); ++j) {
    const CurveSample& s0 = curve.samples[j];
    const CurveSample& s1 = curve.samples[j + 1];
    if (s0.near_critical || s1.near_critical) continue;
    CHECK(((s0.detS > 0) != (s1.detS > 0)) == ((s0.dBda > 0) != (s1.dBda > 0)));
  }
  // endpoint: F/M^3 -> 1/(6 L^2) at the constant-wave end
  CHECK(curve.samples.back().r == doctest::Approx(1.0 / (6.0 * M_PI * M_PI)).epsilon(1e-2));
}

TEST_CASE("counting-formula verdict on a synthetic criterion violation") {
  // with dB/da > 0 the counting verdict requires det S < 0; a positive
  // det with positive trace (n0 = 0) must fail the criterion
  CurveSample s;
  s.dBda = 1.0;
  s.nL = 1;
  s.zL = 1;
  s.n0 = 0;
  s.z0 = 0;
  const bool counts_ok = (s.nL - s.n0 - s.z0 == 0) && (s.zL + s.z0 == 1);
  CHECK(!counts_ok);
}

TEST_CASE("scaling: curves map onto the c = 1 curve") {
  FixedPeriodCurve base = trace_curve(1.0, M_PI, 16);
  FixedPeriodCurve scaled = trace_curve(2.0, M_PI, 16);
  CHECK(scaled.a_L == doctest::Approx(16.0 * base.a_L).epsilon(1e-12));
  for (std::size_t j = 0; j < base.samples.size(); ++j) {
    CHECK(scaled.samples[j].a == doctest::Approx(16.0 * base.samples[j].a).epsilon(1e-8));
    CHECK(scaled.samples[j].b == doctest::Approx(4.0 * base.samples[j].b).epsilon(1e-7));
    CHECK(scaled.samples[j].M == doctest::Approx(2.0 * base.samples[j].M).epsilon(1e-8));
    CHECK(scaled.samples[j].F == doctest::Approx(8.0 * base.samples[j].F).epsilon(1e-8));
  }
}
