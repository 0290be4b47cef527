#pragma once

#include <cmath>
#include <functional>

#include "dpwave/errors.hpp"

namespace dpwave {

// Bracketed bisection refined by Newton steps that are rejected whenever
// they leave the bracket.  Robust near double roots, still quadratic in
// the generic case.  `rel_tol` is relative to the bracket magnitude.
template <class F, class DF>
double bisect_newton(F f, DF df, double lo, double hi, double rel_tol = 1e-13,
                     int max_iter = 200) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw Error(ErrorCode::no_root, "bisect_newton: endpoints do not bracket a root");
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double scale = std::fmax(std::fabs(lo), std::fabs(hi));
    if (hi - lo <= rel_tol * std::fmax(scale, 1e-300)) return 0.5 * (lo + hi);
    double xn = x - fx / df(x);
    x = (xn > lo && xn < hi) ? xn : 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

// Plain bisection for monotone or sign-changing f on [lo, hi].
template <class F>
double bisect(F f, double lo, double hi, double tol_abs, int max_iter = 200) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw Error(ErrorCode::no_root, "bisect: endpoints do not bracket a root");
  for (int it = 0; it < max_iter && hi - lo > tol_abs; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section maximum of f on [lo, hi] to absolute tolerance in x.
template <class F>
double golden_max(F f, double lo, double hi, double tol_abs) {
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol_abs) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace dpwave
