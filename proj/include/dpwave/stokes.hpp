#pragma once

#include <vector>

#include "dpwave/wave.hpp"

// Small-amplitude (Stokes) expansion about the constant-wave boundary
// and its numerical validation along a fixed-period curve.

namespace dpwave {

struct StokesPrediction {
  double phi2 = 0.0, c = 0.0;
  double eta = 0.0;     // (c - phi2)/phi2
  double omega = 0.0;   // linearization frequency
  double L = 0.0;       // 2 pi / omega
  double A = 0.0;
  double alpha2 = 0.0;  // -5/(2 eta^2)
  double M = 0.0;
  double F = 0.0;
  double r = 0.0;       // F/M^3 = (1/(6 L^2)) (1 + (3/2) A^2)
  double alpha = 0.0;   // alpha2 * A^2
};

StokesPrediction stokes_predict(double phi2, double c, double A);

struct StokesSample {
  double eps = 0.0;  // 1 - a/a_L
  double a = 0.0, b = 0.0;
  double A = 0.0;    // (phi_plus - phi2(a)) / phi2(a)
  double M = 0.0, F = 0.0, r = 0.0, alpha = 0.0;       // measured
  double M_pred = 0.0, r_pred = 0.0, alpha_pred = 0.0; // leading-order
  double dev_M = 0.0, dev_r = 0.0;                     // relative deviations
};

struct StokesReport {
  double c = 0.0, L = 0.0, a_L = 0.0;
  double eta_L = 0.0;          // eta at the boundary point a_L
  std::vector<StokesSample> samples;
  double slope_r = 0.0;        // fitted d(F/M^3)/dA^2; expect 1/(4 L^2)
  double slope_alpha = 0.0;    // fitted d alpha/dA^2; expect -5/(2 eta^2)
  double slope_M = 0.0;        // fitted dM/dA^2; expect negative
  double slope_a = 0.0;        // fitted da/dA^2; expect negative
};

// Walks a = a_L (1 - eps_k) along the fixed-L curve, infers the
// amplitude per sample and compares measured functionals with the
// expansion.  Fits are free-intercept least squares against A^2.
StokesReport stokes_validate(double c, double L, const std::vector<double>& epsilons);

}  // namespace dpwave
