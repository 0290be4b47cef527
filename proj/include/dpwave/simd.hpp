#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel kernels backing the numeric inner loops (quadrature
// accumulation, Jacobi rotations, Fourier sums).  A scalar reference
// implementation always exists; an AVX2 variant is selected at runtime
// when the CPU supports it.  Set DPWAVE_SIMD=scalar (or =avx2) in the
// environment to force a backend.

namespace dpwave::simd {

enum class Level { scalar, avx2 };

// Backend chosen at first use; stable for the lifetime of the process.
Level active_level();
std::string_view level_name();

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i a[i]*b[i]*c[i]  (weights * integrand * extra factor)
double dot3(const double* a, const double* b, const double* c, std::size_t n);

// sum_i a[i]
double sum(const double* a, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

// In-place plane rotation of two rows:
//   t      = c*x[i] - s*y[i]
//   y[i]   = s*x[i] + c*y[i]
//   x[i]   = t
void rot2(double* x, double* y, std::size_t n, double c, double s);

namespace detail {
struct Backend {
  double (*dot)(const double*, const double*, std::size_t);
  double (*dot3)(const double*, const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*rot2)(double*, double*, std::size_t, double, double);
};
extern const Backend scalar_backend;
#ifdef DPWAVE_HAVE_AVX2
extern const Backend avx2_backend;
#endif
}  // namespace detail

}  // namespace dpwave::simd
