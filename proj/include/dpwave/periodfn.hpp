#pragma once

#include <optional>

#include "dpwave/wave.hpp"

// The period function L(a,b) of the smooth periodic waves, its
// derivatives, the critical curve a0(b), and the two normalized center
// systems used by the monotonicity analysis.

namespace dpwave {

struct PeriodSample {
  WaveParams params;
  double L = 0.0;
  double d_da = 0.0;
  double d_db = 0.0;
  double err_da = 0.0;  // Richardson error estimates
  double err_db = 0.0;
  int quadrature_nodes = 0;
};

// Fundamental period via the turning-point integral, deflated and
// mapped to s in (-pi/2, pi/2) so the integrand is smooth.
PeriodSample period(const WaveParams& p);

// Central differences with Richardson extrapolation (steps h and h/2).
// Throws StencilOutsideRegion when a stencil point leaves the region.
PeriodSample period_derivatives(const WaveParams& p, double step_a, double step_b);

// Step sizes that keep the Richardson stencil inside the region.
void default_steps(const WaveParams& p, double* step_a, double* step_b);

struct A0Result {
  std::optional<double> a0;
  bool plateau_warning = false;
};

// Maximizer of a -> L(a,b) when b lies in (-(2/9) c^2, 0); absent
// (after a monotonicity scan) otherwise.
A0Result find_a0(double c, double b);

// theta = ((3c / sqrt(c^2 - 8b)) - 1) / 4, the parameter of the
// normalized center system.
double theta_of(double c, double b);

struct PeriodConstants {
  double Delta1 = 0.0;
  double Delta2 = 0.0;
  double ell0 = 0.0;  // 2 pi sqrt(theta)
};
PeriodConstants period_constants(double theta);

// Normalized center system at parameter theta:
//   H(x, y) = A(x) + C(x) y^2,
//   A(x) = -(1/6) x^2 (3x^2 + 2x(1 - 2 theta) - 3 theta),
//   C(x) = (1/2) (x - theta)^2.
double center_A(double theta, double x);
double center_C(double theta, double x);
double center_h_star(double theta);  // A(-1/2) for theta >= 1/2, A(theta) below
double center_h_m(double theta);     // A(theta)

// Period of the orbit at level h in (0, h_star).
double ell_of_h(double theta, double h);

// Energy level of the (c,a,b) wave in the normalized system; satisfies
// period(p).L == ell_of_h(theta_of(c,b), h).
double h_from_params(const WaveParams& p);

// Printed closed form for the limit of ell at h_m (reported alongside
// the numeric limit; the two are not asserted equal).
double ell_hm_closed_form(double theta);
double ell_hm_numeric(double theta);

// Chicone criterion for the eta-normalized system: W = V/(V')^2 convex
// on (x1, x2).  Checks W'' > 0 on a grid (1e-6 end bands excluded).
bool chicone_W_convex(double eta, int grid);

}  // namespace dpwave
