#pragma once

#include <vector>

#include "dpwave/errors.hpp"

// Smooth periodic traveling waves of the DP equation.  A wave is the
// triple (c, a, b): speed, and the two integration constants of the
// profile ODE.  Profiles satisfy the first-order invariant
//   (c - phi)^2 (phi'^2 - phi^2 - b) + a = 0.

namespace dpwave {

struct WaveParams {
  double c = 1.0;
  double a = 0.0;
  double b = 0.0;
};

// Saddle/center pair of the profile ODE: roots of phi (c - phi)^3 = a,
// ordered 0 < phi1 < c/4 < phi2 < c.
struct CriticalPoints {
  double phi1 = 0.0;  // local max of the potential (saddle)
  double phi2 = 0.0;  // local min of the potential (center)
};

// Turning points: the two roots of Q(phi) = (c-phi)^2 (b + phi^2) - a
// that bracket the orbit, phi1 < phi_minus < phi2 < phi_plus < c.
struct TurningPoints {
  double phi_minus = 0.0;
  double phi_plus = 0.0;
  // Deflated quadratic q with Q = (phi - phi_minus)(phi_plus - phi) q(phi),
  // q > 0 on [phi_minus, phi_plus]; coefficients ascending.
  double q0 = 0.0, q1 = 0.0, q2 = 0.0;
  double q(double phi) const { return q0 + phi * (q1 + phi * q2); }
};

struct WaveProfile {
  WaveParams params;
  double L = 0.0;
  int n = 0;
  std::vector<double> x;     // uniform grid on [0, L)
  std::vector<double> phi;   // even, max at x = 0
  std::vector<double> dphi;
  std::vector<double> nu;    // (4 - d_xx)^{-1} phi via the closed form
  double invariant_residual = 0.0;
};

// Quartic Q and the potential U(phi) = -phi^2 + a/(c-phi)^2.
double wave_Q(const WaveParams& p, double phi);
double wave_U(const WaveParams& p, double phi);

inline double a_crit(double c) { return 27.0 / 256.0 * (c * c) * (c * c); }

CriticalPoints critical_points(double c, double a);

// (a_low, a_high) bounds of the existence region at this b:
// a_high = a_-(b) always; a_low = 0 for b <= 0 and a_+(b) for b > 0.
struct RegionBounds {
  double a_low = 0.0;
  double a_high = 0.0;
};
RegionBounds region_boundaries(double c, double b);

// Constant-wave boundary b_-(a) and homoclinic boundary b_+(a).
double b_minus_of_a(double c, double a);
double b_plus_of_a(double c, double a);

// Strict interior test with margin 1e-12 c^4.
bool contains(const WaveParams& p);

TurningPoints turning_points(const WaveParams& p);

// a = 0 boundary: b of the peaked L-periodic wave.
double peaked_limit(double c, double L);

// nu = phi/3 - phi^2/(6c) - b/(12c)   (d = b/4)
double nu_of_phi(const WaveParams& p, double phi);

// Samples the profile on an n-point uniform grid by integrating the
// planar system from the maximum (phi_plus, 0) over half a period and
// mirroring.  L comes from the period function (periodfn).
WaveProfile profile(const WaveParams& p, int n);

}  // namespace dpwave
