#include "dpwave/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "dpwave/errors.hpp"
#include "dpwave/simd.hpp"

namespace dpwave {

namespace {

double off_norm2(const SymMatrix& A) {
  double s = 0.0;
  for (int i = 0; i < A.n; ++i)
    for (int j = i + 1; j < A.n; ++j) s += A.at(i, j) * A.at(i, j);
  return 2.0 * s;
}

double frob_norm2(const SymMatrix& A) {
  return simd::dot(A.a.data(), A.a.data(), A.a.size());
}

}  // namespace

std::vector<double> jacobi_eigenvalues(SymMatrix A, double rel_tol, int max_sweeps) {
  const int n = A.n;
  if (n == 1) return {A.at(0, 0)};
  const double stop2 = rel_tol * rel_tol * frob_norm2(A);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_norm2(A) <= stop2) break;
    if (sweep == max_sweeps - 1)
      throw Error(ErrorCode::non_convergence, "jacobi_eigenvalues: sweeps exhausted");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A.at(p, q);
        if (apq == 0.0) continue;
        const double app = A.at(p, p), aqq = A.at(q, q);
        if (std::fabs(apq) < 1e-300 * (std::fabs(app) + std::fabs(aqq))) continue;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // rows p and q, then restore the 2x2 block exactly
        simd::rot2(A.row(p), A.row(q), n, c, s);
        A.at(p, p) = app - t * apq;
        A.at(q, q) = aqq + t * apq;
        A.at(p, q) = 0.0;
        A.at(q, p) = 0.0;
        // mirror the rotated rows into the columns
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          A.at(i, p) = A.at(p, i);
          A.at(i, q) = A.at(q, i);
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = A.at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> lu_solve(SymMatrix A, std::vector<double> b) {
  const int n = A.n;
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int k = 0; k < n; ++k) {
    int imax = k;
    double vmax = std::fabs(A.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::fabs(A.at(i, k));
      if (v > vmax) {
        vmax = v;
        imax = i;
      }
    }
    if (vmax == 0.0) throw Error(ErrorCode::non_convergence, "lu_solve: singular matrix");
    if (imax != k) {
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(imax, j));
      std::swap(b[k], b[imax]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double m = A.at(i, k) / A.at(k, k);
      A.at(i, k) = m;
      if (m != 0.0) simd::axpy(-m, A.row(k) + k + 1, A.row(i) + k + 1, n - k - 1);
      b[i] -= m * b[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A.at(i, j) * b[j];
    b[i] = s / A.at(i, i);
  }
  return b;
}

}  // namespace dpwave
