#include "dpwave/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "dpwave/errors.hpp"
#include "dpwave/simd.hpp"

namespace dpwave {

namespace {

// Newton iteration on P_n, nodes seeded by the Chebyshev-like estimate.
GaussRule build_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-15) break;
    }
    r.x[i - 1] = -z;
    r.x[n - i] = z;
    r.w[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.w[n - i] = r.w[i - 1];
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = f(mid + half * r.x[i]);
  return half * simd::dot(vals.data(), r.w.data(), n);
}

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, int n_start, int n_max) {
  double prev = integrate_fixed(f, a, b, n_start);
  for (int n = 2 * n_start; n <= n_max; n *= 2) {
    const double cur = integrate_fixed(f, a, b, n);
    const double change = std::fabs(cur - prev);
    if (change <= rel_tol * std::fmax(std::fabs(cur), 1e-300))
      return {cur, n, change};
    prev = cur;
  }
  throw Error(ErrorCode::non_convergence, "integrate_adaptive: node doubling did not converge");
}

}  // namespace dpwave
