#include "dpwave/wave.hpp"

#include <cmath>

#include "dpwave/ode.hpp"
#include "dpwave/periodfn.hpp"
#include "dpwave/roots.hpp"

namespace dpwave {

double wave_Q(const WaveParams& p, double phi) {
  const double cm = p.c - phi;
  return cm * cm * (p.b + phi * phi) - p.a;
}

double wave_U(const WaveParams& p, double phi) {
  const double cm = p.c - phi;
  return -phi * phi + p.a / (cm * cm);
}

CriticalPoints critical_points(double c, double a) {
  if (!(c > 0) || !(a > 0) || !(a < a_crit(c)))
    throw Error(ErrorCode::out_of_range, "critical_points: a outside (0, 27/256 c^4)");
  auto g = [&](double phi) { return phi * std::pow(c - phi, 3) - a; };
  auto dg = [&](double phi) {
    const double cm = c - phi;
    return cm * cm * (c - 4.0 * phi);
  };
  CriticalPoints cp;
  cp.phi1 = bisect_newton(g, dg, 0.0, 0.25 * c);
  cp.phi2 = bisect_newton(g, dg, 0.25 * c, c);
  return cp;
}

RegionBounds region_boundaries(double c, double b) {
  if (!(c > 0) || !(b > -c * c) || !(b < c * c / 8.0))
    throw Error(ErrorCode::out_of_range, "region_boundaries: b outside (-c^2, c^2/8)");
  const double delta = std::sqrt(c * c - 8.0 * b);
  const double phi2 = 0.25 * (c + delta);  // root of b = c phi - 2 phi^2 in (c/4, c)
  RegionBounds rb;
  rb.a_high = phi2 * std::pow(c - phi2, 3);
  if (b > 0) {
    const double phi1 = 0.25 * (c - delta);
    rb.a_low = phi1 * std::pow(c - phi1, 3);
  }
  return rb;
}

double b_minus_of_a(double c, double a) {
  const double phi2 = critical_points(c, a).phi2;
  return c * phi2 - 2.0 * phi2 * phi2;
}

double b_plus_of_a(double c, double a) {
  const double phi1 = critical_points(c, a).phi1;
  return c * phi1 - 2.0 * phi1 * phi1;
}

bool contains(const WaveParams& p) {
  if (!(p.c > 0)) return false;
  const double c2 = p.c * p.c;
  if (!(p.b > -c2) || !(p.b < c2 / 8.0)) return false;
  const double margin = 1e-12 * c2 * c2;
  RegionBounds rb = region_boundaries(p.c, p.b);
  return p.a > rb.a_low + margin && p.a < rb.a_high - margin;
}

TurningPoints turning_points(const WaveParams& p) {
  if (!contains(p)) throw Error(ErrorCode::out_of_range, "turning_points: (a,b) outside region");
  const double guard = 1e-12 * p.c * p.c;
  if (p.b - b_minus_of_a(p.c, p.a) < guard)
    throw Error(ErrorCode::degenerate, "turning_points: at the constant-wave boundary");
  CriticalPoints cp = critical_points(p.c, p.a);
  auto Q = [&](double phi) { return wave_Q(p, phi); };
  auto dQ = [&](double phi) {
    const double cm = p.c - phi;
    return -2.0 * cm * (p.b + phi * phi) + cm * cm * 2.0 * phi;
  };
  TurningPoints tp;
  tp.phi_minus = bisect_newton(Q, dQ, cp.phi1, cp.phi2);
  tp.phi_plus = bisect_newton(Q, dQ, cp.phi2, p.c);
  // synthetic division of the monic quartic by (phi - phi_minus)(phi - phi_plus);
  // Q = phi^4 - 2c phi^3 + (c^2 + b) phi^2 - 2bc phi + (b c^2 - a)
  const double c3 = -2.0 * p.c;
  const double c2 = p.c * p.c + p.b;
  const double s = tp.phi_minus + tp.phi_plus;
  const double r2 = 1.0;            // quotient by the quadratic (monic)
  const double r1 = c3 + s * r2;
  const double r0 = c2 + s * r1 - tp.phi_minus * tp.phi_plus * r2;
  // Q = (phi - phi_minus)(phi - phi_plus)(r2 phi^2 + r1 phi + r0); flip the
  // sign of the first factor pair to match (phi - phi_minus)(phi_plus - phi) q
  tp.q0 = -r0;
  tp.q1 = -r1;
  tp.q2 = -r2;
  return tp;
}

double peaked_limit(double c, double L) {
  if (!(c > 0) || !(L > 0)) throw Error(ErrorCode::out_of_range, "peaked_limit: need c, L > 0");
  const double s = 1.0 / std::cosh(0.5 * L);
  return -c * c * s * s;
}

double nu_of_phi(const WaveParams& p, double phi) {
  return phi / 3.0 - phi * phi / (6.0 * p.c) - p.b / (12.0 * p.c);
}

WaveProfile profile(const WaveParams& p, int n) {
  if (n < 64 || n % 2 != 0)
    throw Error(ErrorCode::out_of_range, "profile: grid size must be even and >= 64");
  TurningPoints tp = turning_points(p);  // throws Degenerate near b_-(a)
  const double L = period(p).L;

  WaveProfile wp;
  wp.params = p;
  wp.L = L;
  wp.n = n;
  wp.x.resize(n);
  wp.phi.resize(n);
  wp.dphi.resize(n);
  wp.nu.resize(n);

  OdeRhs rhs = [&p](double, const double* y, double* dy) {
    dy[0] = y[1];
    dy[1] = y[0] - p.a / std::pow(p.c - y[0], 3);
  };

  const double h = L / n;
  std::vector<double> y = {tp.phi_plus, 0.0};
  wp.phi[0] = y[0];
  wp.dphi[0] = y[1];
  for (int i = 1; i <= n / 2; ++i) {
    ode_integrate(rhs, 2, (i - 1) * h, i * h, y, 1e-12);
    wp.phi[i % n] = y[0];
    wp.dphi[i % n] = y[1];
  }
  // even mirror about x = 0
  for (int i = n / 2 + 1; i < n; ++i) {
    wp.phi[i] = wp.phi[n - i];
    wp.dphi[i] = -wp.dphi[n - i];
  }
  for (int i = 0; i < n; ++i) {
    wp.x[i] = i * h;
    wp.nu[i] = nu_of_phi(p, wp.phi[i]);
  }
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cm = p.c - wp.phi[i];
    const double inv = cm * cm * (wp.dphi[i] * wp.dphi[i] - wp.phi[i] * wp.phi[i] - p.b) + p.a;
    res = std::fmax(res, std::fabs(inv));
  }
  wp.invariant_residual = res;
  const double c4 = p.c * p.c * p.c * p.c;
  if (res > 1e-9 * c4)
    throw Error(ErrorCode::non_convergence, "profile: invariant residual too large");
  return wp;
}

}  // namespace dpwave
