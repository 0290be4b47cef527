#pragma once

#include <string>
#include <vector>

#include "dpwave/wave.hpp"

// Fixed-period curves b = B_L(a), the mass/momentum functionals along
// them, the 2x2 projection matrix S, and the energy stability verdict.

namespace dpwave {

// Right endpoint a_L of the fixed-period curve: the a of the constant
// wave whose linearization frequency gives period L.
double a_max_for_period(double c, double L);

// The unique b with period(c, a, b) = L, by bisection in b (the period
// is strictly increasing in b).  Throws NoRoot when a >= a_L numerically.
double solve_b(double c, double L, double a);

struct Functionals {
  double L = 0.0;
  double M = 0.0;  // mass  (integral of phi)
  double F = 0.0;  // (1/6) integral of phi^3
  int nodes = 0;
};

// L, M, F from the turning-point quadrature (shared nodes, shared
// deflation), so the three are mutually consistent.
Functionals functionals_quad(const WaveParams& p);

// Diagnostic energy from the Fourier coefficients of the sampled profile.
double energy_fourier(const WaveProfile& wp);

// Grid-sum cross-check values (trapezoid on the uniform profile grid).
Functionals functionals_grid(const WaveProfile& wp);

struct ProjectionMatrix {
  double s11 = 0.0, s12 = 0.0, s21 = 0.0, s22 = 0.0;
  double det = 0.0;
  double trace = 0.0;
  int n0 = 0, z0 = 0;
};

// S from finite differences along the fixed-L curve (the scaled form of
// the projection inner products).  `da` is the half-step in a.
// Throws NearCriticalB when the b-variation is below resolution.
ProjectionMatrix projection_matrix(double c, double L, double a, double da);

// Independent route: S entries as inner products <L^{-1} 1, 1>, ... with
// L^{-1} applied in the cosine Fourier basis of the sampled profile.
ProjectionMatrix projection_matrix_direct(const WaveProfile& wp, int modes);

enum class Verdict { stable, criterion_failed, inconclusive };
const char* verdict_name(Verdict v);

struct CurveSample {
  double a = 0.0, b = 0.0;
  double M = 0.0, F = 0.0, r = 0.0;  // r = F / M^3
  double dBda = 0.0, dBda_noise = 0.0;
  double detS = 0.0, traceS = 0.0;
  int n0 = 0, z0 = 0;
  int nL = 0, zL = 0;  // Floquet counts of the Hessian
  bool near_critical = false;
  bool r_decreasing = false;  // local slope diagnostics (recorded separately)
  bool M_increasing = false;
  Verdict verdict = Verdict::inconclusive;
};

struct FixedPeriodCurve {
  double c = 0.0, L = 0.0, a_L = 0.0;
  std::vector<CurveSample> samples;
  int critical_index = -1;  // sample nearest a sign change of B_L'
};

// Samples the curve on a Chebyshev-clustered a-grid, fills functionals,
// secant slopes, det S, eigenvalue counts, and verdicts.
FixedPeriodCurve trace_curve(double c, double L, int n_samples);

}  // namespace dpwave
