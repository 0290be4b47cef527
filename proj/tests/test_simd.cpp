#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "dpwave/simd.hpp"

using namespace dpwave;

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("dot matches the plain loop") {
  for (std::size_t n : {0u, 1u, 3u, 4u, 17u, 64u, 1000u}) {
    auto a = random_vec(n, 1), b = random_vec(n, 2);
    double ref = 0;
    for (std::size_t i = 0; i < n; ++i) ref += a[i] * b[i];
    const double got = simd::dot(a.data(), b.data(), n);
    CHECK(got == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("dot3 matches the plain loop") {
  for (std::size_t n : {5u, 32u, 333u}) {
    auto a = random_vec(n, 3), b = random_vec(n, 4), c = random_vec(n, 5);
    double ref = 0;
    for (std::size_t i = 0; i < n; ++i) ref += a[i] * b[i] * c[i];
    CHECK(simd::dot3(a.data(), b.data(), c.data(), n) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("sum and axpy match") {
  auto a = random_vec(257, 6);
  double ref = 0;
  for (double x : a) ref += x;
  CHECK(simd::sum(a.data(), a.size()) == doctest::Approx(ref).epsilon(1e-13));

  auto y = random_vec(257, 7);
  auto y2 = y;
  simd::axpy(0.37, a.data(), y.data(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) y2[i] += 0.37 * a[i];
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(y[i] == doctest::Approx(y2[i]).epsilon(1e-14));
}

TEST_CASE("rot2 applies the plane rotation") {
  auto x = random_vec(129, 8), y = random_vec(129, 9);
  auto xr = x, yr = y;
  const double c = std::cos(0.7), s = std::sin(0.7);
  simd::rot2(x.data(), y.data(), x.size(), c, s);
  for (std::size_t i = 0; i < xr.size(); ++i) {
    const double t = c * xr[i] - s * yr[i];
    yr[i] = s * xr[i] + c * yr[i];
    xr[i] = t;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i] == doctest::Approx(xr[i]).epsilon(1e-14));
    CHECK(y[i] == doctest::Approx(yr[i]).epsilon(1e-14));
  }
}

TEST_CASE("active backend equals the scalar reference on mixed sizes") {
  // the scalar path is exercised directly through the reference loops
  // above; here the dispatched backend must agree with it
  INFO("backend: ", simd::level_name());
  for (std::size_t n = 1; n < 70; ++n) {
    auto a = random_vec(n, unsigned(100 + n)), b = random_vec(n, unsigned(200 + n));
    double ref = 0;
    for (std::size_t i = 0; i < n; ++i) ref += a[i] * b[i];
    CHECK(simd::dot(a.data(), b.data(), n) == doctest::Approx(ref).epsilon(1e-12));
  }
}
