// dpw: datasets for smooth periodic DP traveling waves.
//
// Subcommands: region | period | a0 | spectrum | curve | stokes | certify.
// Output is CSV (default) or JSON, deterministic for a fixed config.
// Exit codes: 0 success, 1 computational failure, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpwave/exact/certify.hpp"
#include "dpwave/output.hpp"
#include "dpwave/periodfn.hpp"
#include "dpwave/spectral.hpp"
#include "dpwave/stability.hpp"
#include "dpwave/stokes.hpp"
#include "dpwave/wave.hpp"

namespace {

struct CommonOpts {
  double c = 1.0;
  double a = 0.0;
  double b = 0.0;
  double L = M_PI;
  int n = 0;
  double tol = 0.0;  // reserved for per-command overrides
  std::string out;
  std::string format = "csv";
  bool plot_script = false;
};

void add_common(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--c", o->c, "wave speed");
  cmd->add_option("--a", o->a, "second integration constant");
  cmd->add_option("--b", o->b, "first integration constant");
  cmd->add_option("--L", o->L, "period");
  cmd->add_option("--n", o->n, "grid size / sample count");
  cmd->add_option("--tol", o->tol, "tolerance override (advisory)");
  cmd->add_option("--out", o->out, "output path (default: stdout)");
  cmd->add_option("--format", o->format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--plot-script", o->plot_script, "emit <out>.gp plot commands");
}

void emit(const CommonOpts& o, const dpwave::Table& t, const std::string& xlabel,
          const std::string& ylabel) {
  if (o.out.empty()) {
    if (o.format == "json")
      dpwave::write_json(std::cout, t);
    else
      dpwave::write_csv(std::cout, t);
    return;
  }
  std::ofstream os(o.out);
  if (!os) throw dpwave::Error(dpwave::ErrorCode::usage, "cannot open output file " + o.out);
  if (o.format == "json")
    dpwave::write_json(os, t);
  else
    dpwave::write_csv(os, t);
  if (o.plot_script && o.format == "csv")
    dpwave::write_plot_script(o.out, o.out + ".gp", t, xlabel, ylabel);
}

int cmd_region(const CommonOpts& o) {
  const int res = o.n > 0 ? o.n : 200;
  if (res < 50) throw dpwave::Error(dpwave::ErrorCode::usage, "region: resolution must be >= 50");
  const double c = o.c, c2 = c * c;
  dpwave::Table t;
  t.name = "region";
  t.columns = {"b", "a_minus", "a_plus", "a_zero_boundary", "a0"};
  const double b_lo = -c2 + 1e-9 * c2, b_hi = c2 / 8.0 - 1e-9 * c2;
  for (int i = 0; i <= res; ++i) {
    const double b = b_lo + (b_hi - b_lo) * i / res;
    dpwave::RegionBounds rb = dpwave::region_boundaries(c, b);
    const double a_plus = b > 0 ? rb.a_low : 0.0;
    const double a_zero = b < 0 ? 0.0 : std::nan("");
    double a0 = std::nan("");
    if (b > -2.0 / 9.0 * c2 && b < 0) {
      dpwave::A0Result r = dpwave::find_a0(c, b);
      if (r.a0) a0 = *r.a0;
    }
    t.add_row({b, rb.a_high, a_plus, a_zero, a0});
  }
  emit(o, t, "b", "a");
  return 0;
}

int cmd_period(const CommonOpts& o) {
  const int n = o.n > 0 ? o.n : 64;
  dpwave::Table t;
  t.name = "period";
  t.columns = {"a", "b", "L", "dL_da", "dL_db"};
  dpwave::RegionBounds rb = dpwave::region_boundaries(o.c, o.b);
  const double lo = rb.a_low + 1e-4 * (rb.a_high - rb.a_low);
  const double hi = rb.a_high - 1e-4 * (rb.a_high - rb.a_low);
  for (int i = 0; i < n; ++i) {
    const double a = lo + (hi - lo) * i / (n - 1.0);
    dpwave::WaveParams p{o.c, a, o.b};
    double sa, sb;
    dpwave::default_steps(p, &sa, &sb);
    dpwave::PeriodSample ps = dpwave::period_derivatives(p, sa, sb);
    t.add_row({a, o.b, ps.L, ps.d_da, ps.d_db});
  }
  emit(o, t, "a", "L");
  return 0;
}

int cmd_a0(const CommonOpts& o) {
  const int n = o.n > 0 ? o.n : 40;
  dpwave::Table t;
  t.name = "a0";
  t.columns = {"b", "a0", "present", "plateau_warning"};
  const double c2 = o.c * o.c;
  const double b_lo = -2.0 / 9.0 * c2 + 1e-6 * c2, b_hi = -1e-3 * c2;
  for (int i = 0; i < n; ++i) {
    const double b = b_lo + (b_hi - b_lo) * i / (n - 1.0);
    dpwave::A0Result r = dpwave::find_a0(o.c, b);
    t.add_row({b, r.a0 ? *r.a0 : std::nan(""), r.a0 ? 1.0 : 0.0,
               r.plateau_warning ? 1.0 : 0.0});
  }
  emit(o, t, "b", "a0");
  return 0;
}

int cmd_spectrum(const CommonOpts& o) {
  const int n = o.n > 0 ? o.n : 256;
  dpwave::WaveParams p{o.c, o.a, o.b};
  dpwave::WaveProfile wp = dpwave::profile(p, n);
  const double l0 = dpwave::lambda0(wp);
  std::vector<double> grid;
  const int npts = 200;
  for (int i = 0; i < npts; ++i)
    grid.push_back(-o.c + (l0 - 1e-6 * o.c + o.c) * i / (npts - 1.0));
  dpwave::EigenSweep sw = dpwave::eig_sweep(wp, 5, grid);
  // the sweep must start below every crossing
  if (!(sw.branches[0][0] > 0))
    throw dpwave::Error(dpwave::ErrorCode::out_of_range,
                        "spectrum: branches not all positive at the lower lambda end");
  dpwave::Table t;
  t.name = "spectrum";
  t.columns = {"lambda", "mu1", "mu2", "mu3", "mu4", "mu5"};
  for (std::size_t j = 0; j < grid.size(); ++j)
    t.add_row({grid[j], sw.branches[0][j], sw.branches[1][j], sw.branches[2][j],
               sw.branches[3][j], sw.branches[4][j]});
  emit(o, t, "lambda", "mu");
  return 0;
}

int cmd_curve(const CommonOpts& o) {
  const int n = o.n > 0 ? o.n : 64;
  dpwave::FixedPeriodCurve curve = dpwave::trace_curve(o.c, o.L, n);
  dpwave::Table t;
  t.name = "curve";
  t.columns = {"a", "b", "M", "F", "F_over_M3", "dB_da", "detS", "n0", "z0", "verdict"};
  for (const auto& s : curve.samples)
    t.add_row({s.a, s.b, s.M, s.F, s.r, s.dBda, s.detS, double(s.n0), double(s.z0),
               s.verdict == dpwave::Verdict::stable
                   ? 1.0
                   : (s.verdict == dpwave::Verdict::inconclusive ? 0.5 : 0.0)});
  emit(o, t, "a", "F/M^3");
  return 0;
}

int cmd_stokes(const CommonOpts& o) {
  std::vector<double> eps;
  for (int k = 2; k <= 5; ++k) eps.push_back(std::pow(10.0, -k));
  dpwave::StokesReport rep = dpwave::stokes_validate(o.c, o.L, eps);
  dpwave::Table t;
  t.name = "stokes";
  t.columns = {"eps", "a", "b", "A", "M", "M_pred", "F_over_M3", "r_pred", "alpha", "alpha_pred"};
  for (const auto& s : rep.samples)
    t.add_row({s.eps, s.a, s.b, s.A, s.M, s.M_pred, s.r, s.r_pred, s.alpha, s.alpha_pred});
  emit(o, t, "A^2", "F/M^3");
  return 0;
}

int cmd_certify(const std::string& claims, const CommonOpts& o) {
  std::vector<std::string> ids;
  if (claims == "all" || claims.empty()) {
    ids = dpwave::exact::certificate_claims();
  } else {
    std::string cur;
    for (char ch : claims + ",") {
      if (ch == ',') {
        if (!cur.empty()) ids.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
  }
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  bool all_ok = true;
  for (const auto& id : ids) {
    dpwave::exact::Certificate cert = dpwave::exact::certify(id);
    out.push_back(dpwave::exact::certificate_to_json(cert));
    std::cerr << cert.claim_id << ": " << cert.status << "\n";
    if (cert.status == "failed") all_ok = false;
  }
  if (o.out.empty()) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::ofstream os(o.out);
    os << out.dump(2) << '\n';
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smooth periodic DP traveling waves: existence, period function, spectra"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string claims = "all";
  auto* region = app.add_subcommand("region", "existence region boundaries and the a0 curve");
  add_common(region, &o);
  auto* period = app.add_subcommand("period", "period function vs a at fixed b");
  add_common(period, &o);
  auto* a0 = app.add_subcommand("a0", "critical curve a0(b)");
  add_common(a0, &o);
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue branches of K(lambda)");
  add_common(spectrum, &o);
  auto* curve = app.add_subcommand("curve", "fixed-period stability curve");
  add_common(curve, &o);
  auto* stokes = app.add_subcommand("stokes", "small-amplitude expansion validation");
  add_common(stokes, &o);
  auto* certify = app.add_subcommand("certify", "exact polynomial certificates");
  add_common(certify, &o);
  certify->add_option("--claims", claims, "comma-separated claim ids or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (region->parsed()) return cmd_region(o);
    if (period->parsed()) return cmd_period(o);
    if (a0->parsed()) return cmd_a0(o);
    if (spectrum->parsed()) return cmd_spectrum(o);
    if (curve->parsed()) return cmd_curve(o);
    if (stokes->parsed()) return cmd_stokes(o);
    if (certify->parsed()) return cmd_certify(claims, o);
  } catch (const dpwave::Error& e) {
    nlohmann::ordered_json err;
    err["error"] = dpwave::error_name(e.code());
    err["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return e.code() == dpwave::ErrorCode::usage ? 2 : 1;
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = "Internal";
    err["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 2;
}
