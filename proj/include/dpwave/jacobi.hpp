#pragma once

#include <vector>

namespace dpwave {

// Dense symmetric matrix, full row-major storage.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;

  SymMatrix() = default;
  explicit SymMatrix(int n_) : n(n_), a(std::size_t(n_) * n_, 0.0) {}
  double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
  double* row(int i) { return a.data() + std::size_t(i) * n; }
};

// All eigenvalues by cyclic Jacobi rotations, ascending.  Sweeps run
// until the off-diagonal Frobenius norm drops below rel_tol * ||A||_F.
std::vector<double> jacobi_eigenvalues(SymMatrix A, double rel_tol = 1e-12, int max_sweeps = 40);

// Solves A x = b by partial-pivot LU (A need not be symmetric here).
std::vector<double> lu_solve(SymMatrix A, std::vector<double> b);

}  // namespace dpwave
