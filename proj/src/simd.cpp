#include "dpwave/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace dpwave::simd {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * c[i];
  return s;
}

double sum_scalar(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void rot2_scalar(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = c * x[i] - s * y[i];
    y[i] = s * x[i] + c * y[i];
    x[i] = t;
  }
}

const detail::Backend* select() {
  const char* force = std::getenv("DPWAVE_SIMD");
  if (force && std::strcmp(force, "scalar") == 0) return &detail::scalar_backend;
#ifdef DPWAVE_HAVE_AVX2
  if (force && std::strcmp(force, "avx2") == 0) return &detail::avx2_backend;
  if (!force && __builtin_cpu_supports("avx2")) return &detail::avx2_backend;
#endif
  return &detail::scalar_backend;
}

const detail::Backend& backend() {
  static const detail::Backend* b = select();
  return *b;
}

}  // namespace

namespace detail {
const Backend scalar_backend = {dot_scalar, dot3_scalar, sum_scalar, axpy_scalar, rot2_scalar};
}  // namespace detail

Level active_level() {
#ifdef DPWAVE_HAVE_AVX2
  if (&backend() == &detail::avx2_backend) return Level::avx2;
#endif
  return Level::scalar;
}

std::string_view level_name() {
  return active_level() == Level::avx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) { return backend().dot(a, b, n); }
double dot3(const double* a, const double* b, const double* c, std::size_t n) {
  return backend().dot3(a, b, c, n);
}
double sum(const double* a, std::size_t n) { return backend().sum(a, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) {
  backend().axpy(alpha, x, y, n);
}
void rot2(double* x, double* y, std::size_t n, double c, double s) {
  backend().rot2(x, y, n, c, s);
}

}  // namespace dpwave::simd
