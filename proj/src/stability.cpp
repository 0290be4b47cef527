#include "dpwave/stability.hpp"

#include <cmath>

#include "dpwave/fourier.hpp"
#include "dpwave/periodfn.hpp"
#include "dpwave/quadrature.hpp"
#include "dpwave/roots.hpp"
#include "dpwave/simd.hpp"
#include "dpwave/spectral.hpp"

namespace dpwave {

double a_max_for_period(double c, double L) {
  if (!(c > 0) || !(L > 0))
    throw Error(ErrorCode::out_of_range, "a_max_for_period: need c, L > 0");
  const double w2 = std::pow(2.0 * M_PI / L, 2);
  const double phi2 = c * (w2 + 1.0) / (w2 + 4.0);
  return phi2 * std::pow(c - phi2, 3);
}

double solve_b(double c, double L, double a) {
  const double a_L = a_max_for_period(c, L);
  if (!(a > 0) || !(a < a_L))
    throw Error(ErrorCode::no_root, "solve_b: a outside (0, a_L)");
  const CriticalPoints cp = critical_points(c, a);
  const double bm = b_minus_of_a(c, a);
  const double bp = b_plus_of_a(c, a);
  // the endpoint guards must clear the region's a-margin: a step gb off
  // a b-boundary moves the a-boundary by gb (c - phi)^2, which collapses
  // near the peaked corner where phi2 -> c
  const double c4 = c * c * c * c;
  const double base = std::fmax(1e-9 * (bp - bm), 2e-12 * c * c);
  const double gb_lo =
      std::fmax(base, 4e-12 * c4 / ((c - cp.phi2) * (c - cp.phi2)));
  const double gb_hi =
      std::fmax(base, 4e-12 * c4 / ((c - cp.phi1) * (c - cp.phi1)));
  const double lo = bm + gb_lo, hi = bp - gb_hi;
  auto f = [&](double b) { return period(WaveParams{c, a, b}).L - L; };
  if (!(f(lo) < 0))
    throw Error(ErrorCode::no_root, "solve_b: period at the constant-wave end exceeds L");
  if (!(f(hi) > 0))
    throw Error(ErrorCode::no_root, "solve_b: period stays below L up to the homoclinic end");
  return bisect(f, lo, hi, 1e-11 * c * c);
}

Functionals functionals_quad(const WaveParams& p) {
  TurningPoints tp = turning_points(p);
  const double mid = 0.5 * (tp.phi_plus + tp.phi_minus);
  const double rho = 0.5 * (tp.phi_plus - tp.phi_minus);
  Functionals prev{}, cur{};
  for (int n = 32; n <= 4096; n *= 2) {
    const GaussRule& r = gauss_legendre(n);
    double sL = 0.0, sM = 0.0, sF = 0.0;
    std::vector<double> base(n), phiv(n);
    for (int i = 0; i < n; ++i) {
      const double s = M_PI_2 * r.x[i];
      const double phi = mid + rho * std::sin(s);
      base[i] = (p.c - phi) / std::sqrt(tp.q(phi));
      phiv[i] = phi;
    }
    sL = simd::dot(base.data(), r.w.data(), n);
    sM = simd::dot3(base.data(), phiv.data(), r.w.data(), n);
    for (int i = 0; i < n; ++i) base[i] *= phiv[i] * phiv[i] * phiv[i];
    sF = simd::dot(base.data(), r.w.data(), n);
    cur.L = 2.0 * M_PI_2 * sL;
    cur.M = 2.0 * M_PI_2 * sM;
    cur.F = (1.0 / 3.0) * M_PI_2 * sF;
    cur.nodes = n;
    if (n > 32) {
      const bool okL = std::fabs(cur.L - prev.L) <= 1e-11 * std::fabs(cur.L);
      const bool okM = std::fabs(cur.M - prev.M) <= 1e-11 * std::fabs(cur.M);
      const bool okF = std::fabs(cur.F - prev.F) <= 1e-11 * std::fmax(std::fabs(cur.F), 1e-30);
      if (okL && okM && okF) return cur;
    }
    prev = cur;
  }
  throw Error(ErrorCode::non_convergence, "functionals_quad: node doubling did not converge");
}

double energy_fourier(const WaveProfile& wp) {
  const double w = 2.0 * M_PI / wp.L;
  const int kmax = wp.n / 2 - 1;
  std::vector<double> a = cos_coeffs(wp.phi, kmax);
  // E = (L/2) sum |u_hat_k|^2 (1 + k^2 w^2)/(4 + k^2 w^2) over signed k;
  // for the cosine series |u_hat_0|^2 = a_0^2 and |u_hat_{+-k}|^2 = a_k^2/4
  double e = a[0] * a[0] * (1.0 / 4.0);
  for (int k = 1; k <= kmax; ++k) {
    const double xi2 = double(k) * k * w * w;
    e += 0.5 * a[k] * a[k] * (1.0 + xi2) / (4.0 + xi2);
  }
  return 0.5 * wp.L * e;
}

Functionals functionals_grid(const WaveProfile& wp) {
  Functionals f;
  f.L = wp.L;
  const double h = wp.L / wp.n;
  f.M = h * simd::sum(wp.phi.data(), wp.n);
  double s3 = 0.0;
  for (int i = 0; i < wp.n; ++i) s3 += wp.phi[i] * wp.phi[i] * wp.phi[i];
  f.F = h * s3 / 6.0;
  f.nodes = wp.n;
  return f;
}

namespace {

ProjectionMatrix matrix_from_secants(double b_lo, double b_hi, const Functionals& flo,
                                     const Functionals& fhi, const Functionals& fc, double b_c) {
  const double db = b_hi - b_lo;
  const double dM = (fhi.M - flo.M) / db;
  const double dF = (fhi.F - flo.F) / db;
  ProjectionMatrix S;
  S.s11 = 4.0 * dM;
  S.s21 = 8.0 * dF;
  S.s12 = -2.0 * fc.M + 2.0 * b_c * dM;
  S.s22 = -12.0 * fc.F + 4.0 * b_c * dF;
  S.det = 16.0 * (fc.M * dF - 3.0 * fc.F * dM);
  S.trace = S.s11 + S.s22;
  const double floor = 1e-7 * std::fabs(16.0 * fc.M * std::fabs(dF));
  if (S.det < -floor) {
    S.n0 = 1;
    S.z0 = 0;
  } else if (S.det > floor) {
    S.n0 = S.trace < 0 ? 2 : 0;
    S.z0 = 0;
  } else {
    S.n0 = S.trace < 0 ? 1 : 0;
    S.z0 = 1;
  }
  return S;
}

}  // namespace

ProjectionMatrix projection_matrix(double c, double L, double a, double da) {
  const double b_lo = solve_b(c, L, a - da);
  const double b_hi = solve_b(c, L, a + da);
  const double b_c = solve_b(c, L, a);
  if (std::fabs(b_hi - b_lo) < 1e-10 * c * c)
    throw Error(ErrorCode::near_critical_b, "projection_matrix: B_L'(a) below resolution");
  Functionals flo = functionals_quad(WaveParams{c, a - da, b_lo});
  Functionals fhi = functionals_quad(WaveParams{c, a + da, b_hi});
  Functionals fc = functionals_quad(WaveParams{c, a, b_c});
  return matrix_from_secants(b_lo, b_hi, flo, fhi, fc, b_c);
}

ProjectionMatrix projection_matrix_direct(const WaveProfile& wp, int modes) {
  const double c = wp.params.c;
  const double L = wp.L;
  const double w = 2.0 * M_PI / L;
  std::vector<double> cmphi(wp.phi.size());
  for (std::size_t i = 0; i < wp.phi.size(); ++i) cmphi[i] = c - wp.phi[i];
  std::vector<double> ac = cos_coeffs(cmphi, 2 * modes);
  SymMatrix Lc = mult_cos_block(ac, modes);
  for (int k = 0; k <= modes; ++k) Lc.at(k, k) -= 3.0 * c / (4.0 + k * k * w * w);

  // coefficient vectors of 1 and phi^2 in the orthonormal cosine basis
  std::vector<double> one(modes + 1, 0.0);
  one[0] = std::sqrt(L);
  std::vector<double> phi2g(wp.phi.size());
  for (std::size_t i = 0; i < wp.phi.size(); ++i) phi2g[i] = wp.phi[i] * wp.phi[i];
  std::vector<double> ap = cos_coeffs(phi2g, modes);
  std::vector<double> p2(modes + 1);
  p2[0] = std::sqrt(L) * ap[0];
  for (int k = 1; k <= modes; ++k) p2[k] = std::sqrt(0.5 * L) * ap[k];

  std::vector<double> x1 = lu_solve(Lc, one);
  std::vector<double> x2 = lu_solve(Lc, p2);
  ProjectionMatrix S;
  S.s11 = simd::dot(x1.data(), one.data(), one.size());
  S.s12 = simd::dot(x2.data(), one.data(), one.size());
  S.s21 = simd::dot(x1.data(), p2.data(), p2.size());
  S.s22 = simd::dot(x2.data(), p2.data(), p2.size());
  S.det = S.s11 * S.s22 - S.s12 * S.s21;
  S.trace = S.s11 + S.s22;
  const double disc = std::sqrt(std::fmax(0.0, S.trace * S.trace - 4.0 * S.det));
  const double l1 = 0.5 * (S.trace - disc), l2 = 0.5 * (S.trace + disc);
  S.n0 = (l1 < 0) + (l2 < 0);
  S.z0 = 0;
  return S;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::criterion_failed: return "criterion-failed";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

FixedPeriodCurve trace_curve(double c, double L, int n_samples) {
  if (n_samples < 16) throw Error(ErrorCode::out_of_range, "trace_curve: need >= 16 samples");
  FixedPeriodCurve curve;
  curve.c = c;
  curve.L = L;
  curve.a_L = a_max_for_period(c, L);
  const double eps = 1e-3;
  curve.samples.resize(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    // Chebyshev clustering toward both ends of (eps a_L, (1-eps) a_L)
    const double t = 0.5 * (1.0 - std::cos(M_PI * j / (n_samples - 1.0)));
    const double a = curve.a_L * (eps + (1.0 - 2.0 * eps) * t);
    CurveSample& s = curve.samples[j];
    s.a = a;
    s.b = solve_b(c, L, a);
    Functionals f = functionals_quad(WaveParams{c, a, s.b});
    s.M = f.M;
    s.F = f.F;
    s.r = f.F / std::pow(f.M, 3);
  }
  // secant slopes of B_L and the local monotonicity diagnostics
  const int n = n_samples;
  auto& smp = curve.samples;
  for (int j = 0; j < n; ++j) {
    const int jl = std::max(0, j - 1), jr = std::min(n - 1, j + 1);
    const double sr =
        (j < n - 1) ? (smp[j + 1].b - smp[j].b) / (smp[j + 1].a - smp[j].a)
                    : (smp[j].b - smp[j - 1].b) / (smp[j].a - smp[j - 1].a);
    const double sl =
        (j > 0) ? (smp[j].b - smp[j - 1].b) / (smp[j].a - smp[j - 1].a) : sr;
    smp[j].dBda = 0.5 * (sl + sr);
    // noise floor of a secant slope: twice the b-solve tolerance over the
    // local spacing; the sl/sr disagreement is curvature, tracked for the
    // sign test below
    const double spacing = smp[jr].a - smp[jl].a;
    smp[j].dBda_noise = 4e-11 * c * c / spacing + ((sl > 0) != (sr > 0) ? std::fabs(sl - sr) : 0.0);
    const double drda = (smp[jr].r - smp[jl].r) / (smp[jr].a - smp[jl].a);
    const double dMda = (smp[jr].M - smp[jl].M) / (smp[jr].a - smp[jl].a);
    smp[j].r_decreasing = drda < 0;
    smp[j].M_increasing = dMda > 0;
  }
  // per-sample projection matrix and Floquet counts, then the verdict
  for (int j = 0; j < n; ++j) {
    CurveSample& s = smp[j];
    const double da = 1e-4 * curve.a_L;
    s.near_critical = std::fabs(s.dBda) < 3.0 * s.dBda_noise;
    try {
      ProjectionMatrix S =
          projection_matrix(c, L, std::fmin(std::fmax(s.a, da * 1.5), curve.a_L - da * 1.5), da);
      s.detS = S.det;
      s.traceS = S.trace;
      s.n0 = S.n0;
      s.z0 = S.z0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::near_critical_b && e.code() != ErrorCode::no_root) throw;
      s.near_critical = true;
    }
    WaveParams p{c, s.a, s.b};
    FloquetData fd = floquet_theta(profile(p, 128));
    s.nL = fd.n;
    s.zL = fd.z;
    if (fd.ambiguous) s.near_critical = true;
    if (s.near_critical) {
      s.verdict = Verdict::inconclusive;
    } else {
      const bool counts_ok = (s.nL - s.n0 - s.z0 == 0) && (s.zL + s.z0 == 1);
      s.verdict = counts_ok ? Verdict::stable : Verdict::criterion_failed;
    }
  }
  // flag the sample nearest a sign change of B_L'
  for (int j = 0; j + 1 < n; ++j) {
    if ((smp[j].dBda > 0) != (smp[j + 1].dBda > 0)) {
      curve.critical_index =
          std::fabs(smp[j].dBda) < std::fabs(smp[j + 1].dBda) ? j : j + 1;
      break;
    }
  }
  return curve;
}

}  // namespace dpwave
