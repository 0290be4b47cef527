#pragma once

#include <vector>

#include "dpwave/jacobi.hpp"
#include "dpwave/wave.hpp"

// Eigenvalue counting for the Hessian operator
//   L = c - phi - 3c (4 - d_xx)^{-1}
// via the Birman-Schwinger family K(lambda) = -d_xx + A(x, lambda),
// A = (c - 4 phi - 4 lambda)/(c - phi - lambda), a direct Fourier
// discretization of L, and the Floquet shooting criterion.
//
// Sweeps stop at lambda0 - 1e-6 c: how close to the continuous-spectrum
// edge a crossing could hide is not quantified, so that last sliver is
// left unexamined by construction.

namespace dpwave {

// Upper edge of the point spectrum window: c - max phi.
double lambda0(const WaveProfile& wp);

// Second-order periodic finite-difference discretization of K(lambda)
// on the profile grid.  Symmetric by construction.
SymMatrix assemble_K(const WaveProfile& wp, double lambda);

struct EigenSweep {
  std::vector<double> lambda_grid;
  std::vector<std::vector<double>> branches;  // branches[i][j]: i-th eigenvalue at lambda_j
  std::vector<double> crossings;              // zero crossing per branch (NaN if none)
};

EigenSweep eig_sweep(const WaveProfile& wp, int m, const std::vector<double>& grid);

// Crossing of branch `i` refined on profiles at n and 2n and Richardson
// extrapolated (the FD eigenvalues are O(h^2) accurate).
double crossing_extrapolated(const WaveParams& p, int n, int branch);

struct SpectralReport {
  int n = 0;                  // negative eigenvalues of L
  int z = 0;                  // zero-eigenvalue multiplicity estimate
  double kernel_residual = 0.0;  // ||L phi'|| / ||phi'||
  int n_direct = 0;           // direct Fourier count
  int n_floquet = 0;          // Floquet classification
  bool agree_bs_direct = false;
  bool agree_bs_floquet = false;
};

// Birman-Schwinger count (negative eigenvalues of K(0)), cross-checked
// against the direct Fourier count and the Floquet sign.  Disagreement
// is reported in the flags, never silently resolved.
SpectralReport count_negative(const WaveProfile& wp);

// Negative-eigenvalue count of L in the real trigonometric basis with
// `modes` cosine/sine modes.
int direct_L_count(const WaveProfile& wp, int modes);

// All eigenvalues of the two decoupled blocks of L (ascending).
struct DirectLEigs {
  std::vector<double> cos_block;
  std::vector<double> sin_block;
};
DirectLEigs direct_L_eigs(const WaveProfile& wp, int modes);

// Spectral-application residual ||L phi'|| / ||phi'|| on the grid.
double kernel_residual_L(const WaveProfile& wp);

// ||K(0) nu'|| / ||nu'|| on the grid.
double kernel_residual_K(const WaveProfile& wp);

struct FloquetData {
  double theta_F = 0.0;  // y1'(L)
  double y2_L = 0.0;     // should vanish
  double y2p_L = 1.0;    // should be 1
  double tol = 0.0;      // integration error band for theta_F
  int n = 0;             // classified counts (n, z) of L
  int z = 0;
  bool ambiguous = false;  // |theta_F| inside the error band
};

// Shooting for the fundamental set of K(0) v = 0 over one period.
FloquetData floquet_theta(const WaveProfile& wp);

}  // namespace dpwave
