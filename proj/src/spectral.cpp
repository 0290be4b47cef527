#include "dpwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dpwave/fourier.hpp"
#include "dpwave/ode.hpp"
#include "dpwave/roots.hpp"
#include "dpwave/simd.hpp"

namespace dpwave {

double lambda0(const WaveProfile& wp) {
  return wp.params.c - *std::max_element(wp.phi.begin(), wp.phi.end());
}

SymMatrix assemble_K(const WaveProfile& wp, double lambda) {
  const double c = wp.params.c;
  if (!(lambda < lambda0(wp) - 1e-10))
    throw Error(ErrorCode::lambda_too_large, "assemble_K: lambda too close to c - max phi");
  const int n = wp.n;
  const double h = wp.L / n;
  const double ih2 = 1.0 / (h * h);
  SymMatrix K(n);
  for (int i = 0; i < n; ++i) {
    const double den = c - wp.phi[i] - lambda;
    if (!(den > 0)) throw Error(ErrorCode::lambda_too_large, "assemble_K: c - phi - lambda <= 0");
    K.at(i, i) = 2.0 * ih2 + (c - 4.0 * wp.phi[i] - 4.0 * lambda) / den;
    const int j = (i + 1) % n;
    K.at(i, j) = -ih2;
    K.at(j, i) = -ih2;
  }
  return K;
}

namespace {

std::vector<double> lowest_eigs(const WaveProfile& wp, double lambda, int m) {
  std::vector<double> ev = jacobi_eigenvalues(assemble_K(wp, lambda));
  ev.resize(std::size_t(m));
  return ev;
}

}  // namespace

EigenSweep eig_sweep(const WaveProfile& wp, int m, const std::vector<double>& grid) {
  EigenSweep sw;
  sw.lambda_grid = grid;
  sw.branches.assign(m, std::vector<double>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    std::vector<double> ev = lowest_eigs(wp, grid[j], m);
    for (int i = 0; i < m; ++i) sw.branches[i][j] = ev[i];
  }
  sw.crossings.assign(m, std::numeric_limits<double>::quiet_NaN());
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      const double f0 = sw.branches[i][j], f1 = sw.branches[i][j + 1];
      if ((f0 > 0) != (f1 > 0)) {
        auto branch_at = [&](double lam) { return lowest_eigs(wp, lam, i + 1)[i]; };
        sw.crossings[i] = bisect(branch_at, grid[j], grid[j + 1], 1e-9);
        break;
      }
    }
  }
  return sw;
}

double crossing_extrapolated(const WaveParams& p, int n, int branch) {
  auto locate = [&](int nn) {
    WaveProfile wp = profile(p, nn);
    const double hi = lambda0(wp) - 1e-6 * p.c;
    auto branch_at = [&](double lam) {
      return jacobi_eigenvalues(assemble_K(wp, lam))[std::size_t(branch)];
    };
    // the branch is strictly decreasing in lambda
    return bisect(branch_at, -p.c, hi, 1e-10);
  };
  const double l1 = locate(n), l2 = locate(2 * n);
  return (4.0 * l2 - l1) / 3.0;
}

namespace {

// Eigenvalues of K(0) Richardson-extrapolated from the n/2 grid,
// with a per-eigenvalue refinement estimate.
void extrapolated_K0(const WaveProfile& wp, std::vector<double>* mu,
                     std::vector<double>* est) {
  WaveProfile coarse = profile(wp.params, wp.n / 2);
  std::vector<double> fine = jacobi_eigenvalues(assemble_K(wp, 0.0));
  std::vector<double> half = jacobi_eigenvalues(assemble_K(coarse, 0.0));
  const std::size_t m = half.size();
  mu->resize(m);
  est->resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    (*mu)[i] = (4.0 * fine[i] - half[i]) / 3.0;
    (*est)[i] = std::fabs(fine[i] - half[i]) / 3.0 + 1e-12;
  }
}

}  // namespace

SpectralReport count_negative(const WaveProfile& wp) {
  std::vector<double> mu, est;
  extrapolated_K0(wp, &mu, &est);
  SpectralReport rep;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double band = 5.0 * est[i];
    if (mu[i] < -band)
      ++rep.n;
    else if (std::fabs(mu[i]) <= band)
      ++rep.z;
  }
  rep.kernel_residual = kernel_residual_L(wp);
  rep.n_direct = direct_L_count(wp, std::max(64, wp.n / 4));
  FloquetData fd = floquet_theta(wp);
  rep.n_floquet = fd.n;
  rep.agree_bs_direct = rep.n == rep.n_direct;
  rep.agree_bs_floquet = fd.ambiguous || rep.n == rep.n_floquet;
  return rep;
}

DirectLEigs direct_L_eigs(const WaveProfile& wp, int modes) {
  if (modes < 32) throw Error(ErrorCode::out_of_range, "direct_L_eigs: need modes >= 32");
  if (2 * modes >= wp.n)
    throw Error(ErrorCode::out_of_range, "direct_L_eigs: grid too coarse for mode count");
  const double c = wp.params.c;
  const double w = 2.0 * M_PI / wp.L;
  std::vector<double> cmphi(wp.phi.size());
  for (std::size_t i = 0; i < wp.phi.size(); ++i) cmphi[i] = c - wp.phi[i];
  std::vector<double> a = cos_coeffs(cmphi, 2 * modes);
  SymMatrix Lc = mult_cos_block(a, modes);
  SymMatrix Ls = mult_sin_block(a, modes);
  for (int k = 0; k <= modes; ++k) Lc.at(k, k) -= 3.0 * c / (4.0 + k * k * w * w);
  for (int k = 1; k <= modes; ++k) Ls.at(k - 1, k - 1) -= 3.0 * c / (4.0 + k * k * w * w);
  DirectLEigs de;
  de.cos_block = jacobi_eigenvalues(std::move(Lc));
  de.sin_block = jacobi_eigenvalues(std::move(Ls));
  return de;
}

int direct_L_count(const WaveProfile& wp, int modes) {
  DirectLEigs de = direct_L_eigs(wp, modes);
  // the kernel eigenvalue (L phi' = 0) lands within ~1e-8 c of zero in
  // this basis; exclude a band around zero so it is never miscounted
  const double band = 1e-7 * wp.params.c;
  int n = 0;
  for (double v : de.cos_block) n += v < -band;
  for (double v : de.sin_block) n += v < -band;
  return n;
}

double kernel_residual_L(const WaveProfile& wp) {
  const double c = wp.params.c;
  std::vector<double> lphi =
      apply_even_symbol(wp.dphi, wp.L, [c](double xi) { return -3.0 * c / (4.0 + xi * xi); });
  for (int i = 0; i < wp.n; ++i) lphi[i] += (c - wp.phi[i]) * wp.dphi[i];
  const double num = std::sqrt(simd::dot(lphi.data(), lphi.data(), lphi.size()));
  const double den = std::sqrt(simd::dot(wp.dphi.data(), wp.dphi.data(), wp.dphi.size()));
  return num / den;
}

double kernel_residual_K(const WaveProfile& wp) {
  const double c = wp.params.c;
  std::vector<double> nup = spectral_derivative(wp.nu, wp.L);
  std::vector<double> nuppp = apply_even_symbol(nup, wp.L, [](double xi) { return -xi * xi; });
  std::vector<double> r(wp.n);
  for (int i = 0; i < wp.n; ++i) {
    const double A = (c - 4.0 * wp.phi[i]) / (c - wp.phi[i]);
    r[i] = -nuppp[i] + A * nup[i];
  }
  const double num = std::sqrt(simd::dot(r.data(), r.data(), r.size()));
  const double den = std::sqrt(simd::dot(nup.data(), nup.data(), nup.size()));
  return num / den;
}

FloquetData floquet_theta(const WaveProfile& wp) {
  const WaveParams p = wp.params;
  const double L = wp.L;
  OdeRhs rhs = [&p](double, const double* y, double* dy) {
    const double phi = y[0];
    const double A = (p.c - 4.0 * phi) / (p.c - phi);
    dy[0] = y[1];
    dy[1] = phi - p.a / std::pow(p.c - phi, 3);
    dy[2] = y[3];
    dy[3] = A * y[2];
    dy[4] = y[5];
    dy[5] = A * y[4];
  };
  auto shoot = [&](double tol) {
    std::vector<double> y = {wp.phi[0], 0.0, 1.0, 0.0, 0.0, 1.0};
    ode_integrate(rhs, 6, 0.0, L, y, tol);
    return y;
  };
  std::vector<double> fine = shoot(1e-12);
  std::vector<double> coarse = shoot(1e-9);
  FloquetData fd;
  fd.theta_F = fine[3];
  fd.y2_L = fine[4];
  fd.y2p_L = fine[5];
  fd.tol = 10.0 * std::fabs(fine[3] - coarse[3]) + 1e-11 * (1.0 + std::fabs(fine[3]));
  if (std::fabs(fd.theta_F) <= fd.tol) {
    fd.n = 1;
    fd.z = 2;
    fd.ambiguous = true;
  } else if (fd.theta_F < 0) {
    fd.n = 2;
    fd.z = 1;
  } else {
    fd.n = 1;
    fd.z = 1;
  }
  return fd;
}

}  // namespace dpwave
