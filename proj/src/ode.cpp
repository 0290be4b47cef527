#include "dpwave/ode.hpp"

#include <cmath>

#include "dpwave/errors.hpp"

namespace dpwave {

namespace {

constexpr int kLevels = 4;                   // {2,4,6,8} midpoint substeps
constexpr int kSeq[kLevels] = {2, 4, 6, 8};  // even counts: h^2 error expansion

// Gragg's smoothed midpoint scheme over one macro step of size H.
void midpoint_pass(const OdeRhs& f, int dim, double x, const double* y, double H, int n,
                   double* out, std::vector<double>& zm, std::vector<double>& zp,
                   std::vector<double>& dz) {
  const double h = H / n;
  for (int i = 0; i < dim; ++i) zm[i] = y[i];
  f(x, y, dz.data());
  for (int i = 0; i < dim; ++i) zp[i] = y[i] + h * dz[i];
  for (int m = 1; m < n; ++m) {
    f(x + m * h, zp.data(), dz.data());
    for (int i = 0; i < dim; ++i) {
      const double t = zm[i] + 2.0 * h * dz[i];
      zm[i] = zp[i];
      zp[i] = t;
    }
  }
  f(x + H, zp.data(), dz.data());
  for (int i = 0; i < dim; ++i) out[i] = 0.5 * (zp[i] + zm[i] + h * dz[i]);
}

struct Stepper {
  const OdeRhs& f;
  int dim;
  double tol;
  // T[j][k], each a dim-vector; row j built from the n_j midpoint pass
  std::vector<std::vector<std::vector<double>>> T;
  std::vector<double> zm, zp, dz;

  Stepper(const OdeRhs& f_, int dim_, double tol_)
      : f(f_), dim(dim_), tol(tol_), zm(dim), zp(dim), dz(dim) {
    T.resize(kLevels);
    for (int j = 0; j < kLevels; ++j) T[j].assign(j + 1, std::vector<double>(dim));
  }

  // One attempted macro step.  On success y is advanced and the return
  // value is the accepted step; on failure returns 0.  *h_next always
  // receives the suggested next step.
  double try_step(double x, std::vector<double>& y, double h, double* h_next) {
    for (int j = 0; j < kLevels; ++j) {
      midpoint_pass(f, dim, x, y.data(), h, kSeq[j], T[j][0].data(), zm, zp, dz);
      for (int k = 1; k <= j; ++k) {
        const double r = double(kSeq[j]) / double(kSeq[j - k]);
        const double den = r * r - 1.0;
        for (int i = 0; i < dim; ++i)
          T[j][k][i] = T[j][k - 1][i] + (T[j][k - 1][i] - T[j - 1][k - 1][i]) / den;
      }
    }
    const auto& best = T[kLevels - 1][kLevels - 1];
    const auto& next_best = T[kLevels - 1][kLevels - 2];
    double err = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double sc = tol + tol * std::fmax(std::fabs(y[i]), std::fabs(best[i]));
      err = std::fmax(err, std::fabs(best[i] - next_best[i]) / sc);
    }
    const double safety = 0.9;
    const double factor =
        err > 0 ? std::fmin(4.0, std::fmax(0.2, safety * std::pow(err, -1.0 / 8.0))) : 4.0;
    *h_next = h * factor;
    if (err > 1.0) return 0.0;
    y = best;
    return h;
  }
};

}  // namespace

void ode_integrate(const OdeRhs& f, int dim, double x0, double x1, std::vector<double>& y,
                   double tol) {
  if (x1 == x0) return;
  const double dir = x1 > x0 ? 1.0 : -1.0;
  Stepper st(f, dim, tol);
  double x = x0;
  double h = dir * std::fmin(std::fabs(x1 - x0), 0.1);
  int rejects = 0;
  while (dir * (x1 - x) > 1e-15 * std::fabs(x1 - x0)) {
    if (dir * (x + h) > dir * x1) h = x1 - x;
    double h_next;
    const double taken = st.try_step(x, y, h, &h_next);
    if (taken != 0.0) {
      x += taken;
      rejects = 0;
    } else if (++rejects > 60) {
      throw Error(ErrorCode::non_convergence, "ode_integrate: repeated step rejection");
    }
    h = h_next;
    if (std::fabs(h) < 1e-14 * std::fmax(std::fabs(x), 1.0))
      throw Error(ErrorCode::non_convergence, "ode_integrate: step size underflow");
  }
}

double ode_integrate_until(const OdeRhs& f, int dim,
                           const std::function<double(double, const double*)>& event, double x0,
                           double x_max, std::vector<double>& y, double tol, double x_tol) {
  Stepper st(f, dim, tol);
  double x = x0;
  double h = std::fmin((x_max - x0) * 0.01, 0.05);
  const double e0 = event(x0, y.data());
  std::vector<double> y_prev = y;
  double x_prev = x;
  int rejects = 0;
  while (x < x_max) {
    if (x + h > x_max) h = x_max - x;
    double h_next;
    y_prev = y;
    x_prev = x;
    const double taken = st.try_step(x, y, h, &h_next);
    if (taken != 0.0) {
      x += taken;
      rejects = 0;
      const double e = event(x, y.data());
      if (e == 0.0) return x;
      if ((e > 0) != (e0 > 0)) {
        // crossing inside the last step: bisect on the sub-step endpoint
        double lo = x_prev, hi = x;
        while (hi - lo > x_tol) {
          const double mid = 0.5 * (lo + hi);
          std::vector<double> ym = y_prev;
          ode_integrate(f, dim, x_prev, mid, ym, tol);
          if ((event(mid, ym.data()) > 0) == (e0 > 0)) {
            lo = mid;
          } else {
            hi = mid;
            y = ym;
          }
        }
        return hi;
      }
    } else if (++rejects > 60) {
      throw Error(ErrorCode::non_convergence, "ode_integrate_until: repeated step rejection");
    }
    h = h_next;
  }
  throw Error(ErrorCode::no_root, "ode_integrate_until: no event crossing before x_max");
}

}  // namespace dpwave
