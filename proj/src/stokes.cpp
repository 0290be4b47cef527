#include "dpwave/stokes.hpp"

#include <algorithm>
#include <cmath>

#include "dpwave/stability.hpp"

namespace dpwave {

StokesPrediction stokes_predict(double phi2, double c, double A) {
  if (!(phi2 > 0.25 * c) || !(phi2 < c))
    throw Error(ErrorCode::out_of_range, "stokes_predict: phi2 outside (c/4, c)");
  if (!(A >= 0) || !(A <= 0.2))
    throw Error(ErrorCode::out_of_range, "stokes_predict: A outside [0, 0.2]");
  StokesPrediction sp;
  sp.phi2 = phi2;
  sp.c = c;
  sp.A = A;
  sp.eta = (c - phi2) / phi2;
  const double w2 = 3.0 * phi2 / (c - phi2) - 1.0;
  sp.omega = std::sqrt(w2);
  sp.L = 2.0 * M_PI / sp.omega;
  sp.alpha2 = -5.0 / (2.0 * sp.eta * sp.eta);
  const double A2 = A * A;
  const double e2 = sp.eta * sp.eta;
  sp.M = phi2 * sp.L * (1.0 - A2 / (2.0 * e2 * w2));
  sp.F = (phi2 * phi2 * phi2 * sp.L / 6.0) * (1.0 + 1.5 * (1.0 - 1.0 / (e2 * w2)) * A2);
  sp.r = (1.0 + 1.5 * A2) / (6.0 * sp.L * sp.L);
  sp.alpha = sp.alpha2 * A2;
  return sp;
}

namespace {

// free-intercept least squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

// slope from the three smallest-x samples: the O(x^2) curvature of the
// expansion would otherwise bias the fit through the largest amplitude
double fit_slope_small(std::vector<double> x, std::vector<double> y) {
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < idx.size() && i < 3; ++i) {
    xs.push_back(x[idx[i]]);
    ys.push_back(y[idx[i]]);
  }
  return fit_slope(xs, ys);
}

}  // namespace

StokesReport stokes_validate(double c, double L, const std::vector<double>& epsilons) {
  StokesReport rep;
  rep.c = c;
  rep.L = L;
  rep.a_L = a_max_for_period(c, L);
  const double w2 = std::pow(2.0 * M_PI / L, 2);
  const double phi2_L = c * (w2 + 1.0) / (w2 + 4.0);
  rep.eta_L = (c - phi2_L) / phi2_L;

  std::vector<double> A2s, rs, alphas, Ms, as;
  for (double eps : epsilons) {
    StokesSample s;
    s.eps = eps;
    s.a = rep.a_L * (1.0 - eps);
    s.b = solve_b(c, L, s.a);
    WaveParams p{c, s.a, s.b};
    TurningPoints tp = turning_points(p);
    const double phi2 = critical_points(c, s.a).phi2;  // recomputed per sample
    s.A = (tp.phi_plus - phi2) / phi2;
    Functionals f = functionals_quad(p);
    s.M = f.M;
    s.F = f.F;
    s.r = f.F / std::pow(f.M, 3);
    s.alpha = s.a / rep.a_L - 1.0;
    StokesPrediction sp = stokes_predict(phi2, c, s.A);
    s.M_pred = phi2 * L * (1.0 - s.A * s.A / (2.0 * sp.eta * sp.eta * sp.omega * sp.omega));
    s.r_pred = (1.0 + 1.5 * s.A * s.A) / (6.0 * L * L);
    s.alpha_pred = sp.alpha2 * s.A * s.A;
    s.dev_M = std::fabs(s.M - s.M_pred) / std::fabs(s.M);
    s.dev_r = std::fabs(s.r - s.r_pred) / std::fabs(s.r);
    rep.samples.push_back(s);
    A2s.push_back(s.A * s.A);
    rs.push_back(s.r);
    alphas.push_back(s.alpha);
    Ms.push_back(s.M);
    as.push_back(s.a);
  }
  rep.slope_r = fit_slope_small(A2s, rs);
  rep.slope_alpha = fit_slope_small(A2s, alphas);
  rep.slope_M = fit_slope(A2s, Ms);
  rep.slope_a = fit_slope(A2s, as);
  return rep;
}

}  // namespace dpwave
