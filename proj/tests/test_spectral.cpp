#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "dpwave/periodfn.hpp"
#include "dpwave/spectral.hpp"

using namespace dpwave;

namespace {

// synthetic constant-wave profile at the center phi2 (the b -> b_-(a)
// limit), built directly rather than integrated
WaveProfile constant_profile(double c, double phi2, double L, int n) {
  WaveProfile wp;
  wp.params = {c, phi2 * std::pow(c - phi2, 3), c * phi2 - 2.0 * phi2 * phi2};
  wp.L = L;
  wp.n = n;
  wp.x.resize(n);
  wp.phi.assign(n, phi2);
  wp.dphi.assign(n, 0.0);
  wp.nu.resize(n);
  for (int i = 0; i < n; ++i) {
    wp.x[i] = L * i / n;
    wp.nu[i] = nu_of_phi(wp.params, phi2);
  }
  return wp;
}

double mu_closed_form(double c, double phi2, int k) {
  return c - phi2 - 3.0 * c * (c - phi2) / (4.0 * (c - phi2) + k * k * (4.0 * phi2 - c));
}

}  // namespace

TEST_CASE("assemble_K: symmetric, positive for very negative lambda") {
  WaveProfile wp = profile({1.0, 0.04, 0.0}, 128);
  SymMatrix K = assemble_K(wp, -0.2);
  for (int i = 0; i < K.n; ++i)
    for (int j = 0; j < i; ++j) CHECK(K.at(i, j) == K.at(j, i));
  std::vector<double> ev = jacobi_eigenvalues(assemble_K(wp, -1.0));
  CHECK(ev.front() > 0.0);  // A(x, lambda) -> 4 as lambda -> -inf
  CHECK_THROWS_AS(assemble_K(wp, lambda0(wp)), Error);
}

TEST_CASE("constant wave: K(lambda=0) eigenvalues match the mode formula") {
  const double c = 1.0, phi2 = 0.6;
  const double w2 = 3.0 * phi2 / (c - phi2) - 1.0;
  const double L = 2.0 * M_PI / std::sqrt(w2);
  auto eigs_at = [&](int n) {
    WaveProfile wp = constant_profile(c, phi2, L, n);
    return jacobi_eigenvalues(assemble_K(wp, 0.0));
  };
  std::vector<double> e1 = eigs_at(128), e2 = eigs_at(256);
  const double A0 = (c - 4.0 * phi2) / (c - phi2);
  const double w = 2.0 * M_PI / L;
  // lowest modes k = 0, +-1, +-2: Richardson-extrapolated FD eigenvalues
  std::vector<double> expect = {A0, w * w + A0, w * w + A0, 4 * w * w + A0, 4 * w * w + A0};
  std::sort(expect.begin(), expect.end());
  for (int i = 0; i < 5; ++i) {
    const double rich = (4.0 * e2[i] - e1[i]) / 3.0;
    CHECK(std::fabs(rich - expect[i]) < 2e-6);  // residual O(h^4 k^6)
  }
}

TEST_CASE("constant wave: direct L eigenvalues equal mu_k, double zero at k = 1") {
  const double c = 1.0, phi2 = 0.6;
  const double w2 = 3.0 * phi2 / (c - phi2) - 1.0;
  const double L = 2.0 * M_PI / std::sqrt(w2);
  WaveProfile wp = constant_profile(c, phi2, L, 256);
  DirectLEigs de = direct_L_eigs(wp, 48);
  // cos block contains k = 0..K, sin block k = 1..K
  std::vector<double> expect_cos, expect_sin;
  for (int k = 0; k <= 48; ++k) expect_cos.push_back(mu_closed_form(c, phi2, k));
  for (int k = 1; k <= 48; ++k) expect_sin.push_back(mu_closed_form(c, phi2, k));
  std::sort(expect_cos.begin(), expect_cos.end());
  std::sort(expect_sin.begin(), expect_sin.end());
  for (std::size_t i = 0; i < expect_cos.size(); ++i)
    CHECK(de.cos_block[i] == doctest::Approx(expect_cos[i]).epsilon(1e-10));
  for (std::size_t i = 0; i < expect_sin.size(); ++i)
    CHECK(de.sin_block[i] == doctest::Approx(expect_sin[i]).epsilon(1e-10));
  // k = +-1 is an exact double zero: one zero in each block
  CHECK(std::fabs(mu_closed_form(c, phi2, 1)) < 1e-15);
  // counts: only k = 0 negative
  CHECK(direct_L_count(wp, 48) == 1);
}

TEST_CASE("spectral counts at the two reference points") {
  {
    WaveProfile wp = profile({1.0, 0.04, 0.0}, 256);
    SpectralReport rep = count_negative(wp);
    CHECK(rep.n == 1);
    CHECK(rep.z == 1);
    CHECK(rep.agree_bs_direct);
    CHECK(rep.agree_bs_floquet);
    CHECK(rep.kernel_residual <= 1e-6);
  }
  {
    WaveProfile wp = profile({1.0, 0.001, -0.3}, 256);
    SpectralReport rep = count_negative(wp);
    CHECK(rep.n == 2);
    CHECK(rep.z == 1);
    CHECK(rep.agree_bs_direct);
    CHECK(rep.agree_bs_floquet);
  }
}

TEST_CASE("eig_sweep: branches decrease, crossing pattern above a0") {
  WaveProfile wp = profile({1.0, 0.04, 0.0}, 192);
  std::vector<double> grid;
  const double hi = lambda0(wp) - 1e-6;
  for (int i = 0; i < 60; ++i) grid.push_back(-1.0 + (hi + 1.0) * i / 59.0);
  EigenSweep sw = eig_sweep(wp, 5, grid);
  for (int b = 0; b < 5; ++b)
    for (std::size_t j = 0; j + 1 < grid.size(); ++j)
      CHECK(sw.branches[b][j + 1] < sw.branches[b][j]);
  // exactly one branch crosses strictly below zero; the second branch
  // crosses near lambda = 0
  CHECK(sw.crossings[0] < -1e-3);
  CHECK(std::fabs(sw.crossings[1]) < 2e-2);
  // the higher branches plunge only near the continuous-spectrum edge
  CHECK(sw.crossings[2] > 0.0);
  CHECK(sw.crossings[4] > 0.0);
}

TEST_CASE("zero branch crossing: grid extrapolation lands within 2e-3") {
  const double l1 = crossing_extrapolated({1.0, 0.04, 0.0}, 128, 1);
  CHECK(std::fabs(l1) <= 2e-3);
  const double l2 = crossing_extrapolated({1.0, 0.001, -0.3}, 128, 2);
  CHECK(std::fabs(l2) <= 2e-3);
}

TEST_CASE("kernel residuals") {
  WaveProfile wp = profile({1.0, 0.03, -0.1}, 256);
  CHECK(kernel_residual_L(wp) <= 1e-6);
  CHECK(kernel_residual_K(wp) <= 1e-6);
}

TEST_CASE("floquet: fundamental set and sign relation to dL/da") {
  WaveProfile wp = profile({1.0, 0.04, 0.0}, 128);
  FloquetData fd = floquet_theta(wp);
  CHECK(std::fabs(fd.y2_L) < 1e-8);
  CHECK(fd.y2p_L == doctest::Approx(1.0).epsilon(1e-8));

  for (WaveParams p : {WaveParams{1.0, 0.04, 0.0}, WaveParams{1.0, 0.02, -0.05},
                       WaveParams{1.0, 0.004, -0.3}}) {
    FloquetData f = floquet_theta(profile(p, 128));
    double sa, sb;
    default_steps(p, &sa, &sb);
    PeriodSample ps = period_derivatives(p, sa, sb);
    if (std::fabs(ps.d_da) > ps.err_da && !f.ambiguous) {
      CHECK((f.theta_F > 0) == (ps.d_da < 0));
    }
    // classification consistency with the count report
    SpectralReport rep = count_negative(profile(p, 256));
    CHECK(rep.n == f.n);
  }
}

TEST_CASE("floquet classification splits across the a0 curve") {
  A0Result r = find_a0(1.0, -0.2);
  REQUIRE(r.a0.has_value());
  // n = 1 above the curve, n = 2 below it
  for (double f : {1.15, 1.4}) {
    WaveParams p{1.0, *r.a0 * f, -0.2};
    if (!contains(p)) continue;
    CHECK(floquet_theta(profile(p, 128)).n == 1);
  }
  for (double f : {0.5, 0.85}) {
    CHECK(floquet_theta(profile({1.0, *r.a0 * f, -0.2}, 128)).n == 2);
  }
}

TEST_CASE("floquet: near the critical curve a0(b) theta_F is small") {
  A0Result r = find_a0(1.0, -0.2);
  REQUIRE(r.a0.has_value());
  FloquetData fd = floquet_theta(profile({1.0, *r.a0, -0.2}, 192));
  // scale: |theta_F| at generic points is O(1..100); on the curve it
  // collapses toward the integration error band
  CHECK(std::fabs(fd.theta_F) < 1e-3);
}

TEST_CASE("grid refinement: Richardson-accepted eigenvalues") {
  WaveParams p{1.0, 0.04, 0.0};
  WaveProfile w1 = profile(p, 128);
  WaveProfile w2 = profile(p, 256);
  std::vector<double> e1 = jacobi_eigenvalues(assemble_K(w1, 0.0));
  std::vector<double> e2 = jacobi_eigenvalues(assemble_K(w2, 0.0));
  for (int i = 0; i < 3; ++i) CHECK(std::fabs(e2[i] - e1[i]) < 1e-3);
  WaveProfile w4 = profile(p, 512);
  std::vector<double> e4 = jacobi_eigenvalues(assemble_K(w4, 0.0));
  for (int i = 0; i < 3; ++i) {
    const double r1 = (4.0 * e2[i] - e1[i]) / 3.0;
    const double r2 = (4.0 * e4[i] - e2[i]) / 3.0;
    CHECK(std::fabs(r2 - r1) <= 1e-6);
  }
}
