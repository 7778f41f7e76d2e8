// Acceptance suite: one check per shipped claim, each printed as a single
// pass/fail line.  Run with no arguments for all criteria, or select one with
// --criterion N.  --cli PATH points at the command-line binary (used by the
// determinism criterion).

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "flatzero/beltrami.hpp"
#include "flatzero/cutoff.hpp"
#include "flatzero/finite_diff.hpp"
#include "flatzero/map_jet.hpp"
#include "flatzero/verify.hpp"

using namespace flatzero;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

const SmoothStep& step() {
  static const SmoothStep s = build_step(1e-12);
  return s;
}

double constant_of(const SuiteRecord& rec, const std::string& name) {
  for (const auto& [k, v] : rec.constants)
    if (k == name) return v;
  return std::numeric_limits<double>::quiet_NaN();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// 1. step half-point constraints and exact plateaus
Outcome criterion_step() {
  Outcome out;
  const SmoothStep& s = step();
  out.require(std::fabs(s.value(0.5) - 0.5) < 1e-10, "s(1/2) != 1/2");
  out.require(std::fabs(s.density(0.5) - 2.0) < 1e-10, "s'(1/2) != 2");
  out.require(std::fabs(s.density_prime(0.5)) < 1e-10, "s''(1/2) != 0");
  for (double x : {0.0, 0.1, 0.2, 0.25}) out.require(s.value(x) == 0.0, "s not exactly 0 at x=" + fmt(x));
  for (double x : {0.75, 0.8, 0.9, 1.0}) out.require(s.value(x) == 1.0, "s not exactly 1 at x=" + fmt(x));
  return out;
}

// 2. cutoff closed forms at mid-annulus points + finite differences
Outcome criterion_cutoff() {
  Outcome out;
  Scheme rosay(SchemeKind::rosay);
  Scheme loglog(SchemeKind::loglog);
  struct Probe {
    const Scheme* scheme;
    int n;
  };
  for (Probe p : {Probe{&rosay, 3}, Probe{&rosay, 12}, Probe{&loglog, 7}, Probe{&loglog, 30}}) {
    Annulus a{p.scheme->radius(p.n + 1), p.scheme->radius(p.n)};
    double x_mid = a.r_inner + 0.5 * a.delta_r();
    ChiJet jet = chi_jet(step(), a, lc_from_polar_log(std::log(x_mid), 0.0));
    LogComplex inv_dr = lc_from_real(1.0 / a.delta_r());
    LogComplex mixed = lc_from_real(1.0 / (2.0 * x_mid * a.delta_r()));
    out.require(relative_difference(jet.d_zbar, inv_dr) < 1e-10, "d_zbar != 1/dr at n=" + std::to_string(p.n));
    out.require(relative_difference(jet.d_z, inv_dr) < 1e-10, "d_z != 1/dr");
    out.require(relative_difference(jet.d_zzbar, mixed) < 1e-10, "d_zzbar != 1/(2 x dr)");
    out.require(relative_difference(jet.d_zbarzbar, lc_neg(mixed)) < 1e-10, "d_zbarzbar != -1/(2 x dr)");
  }
  // finite differences at interior points
  Annulus a{loglog.radius(8), loglog.radius(7)};
  for (double t : {0.37, 0.5, 0.62}) {
    double r = a.r_inner + t * a.delta_r();
    double theta = 0.8;
    ChiJet jet = chi_jet(step(), a, lc_from_polar_log(std::log(r), theta));
    auto chi_value = [&](double x, double y) {
      return std::complex<double>(chi_jet(step(), a, lc_from_complex({x, y})).value, 0.0);
    };
    WirtingerFirst f1 = fd_wirtinger_first(chi_value, r * std::cos(theta), r * std::sin(theta), 3e-4 * a.delta_r(), 2);
    WirtingerSecond f2 = fd_wirtinger_second(chi_value, r * std::cos(theta), r * std::sin(theta), 3e-3 * a.delta_r(), 2);
    auto rel = [](std::complex<double> an, std::complex<double> fd) { return std::abs(an - fd) / std::abs(an); };
    out.require(rel(lc_to_complex(jet.d_z), f1.d_z) < 1e-6, "chi d_z vs FD at t=" + fmt(t));
    out.require(rel(lc_to_complex(jet.d_zzbar), f2.d_zzbar) < 1e-6, "chi d_zzbar vs FD");
    out.require(rel(lc_to_complex(jet.d_zbarzbar), f2.d_zbarzbar) < 1e-6, "chi d_zbarzbar vs FD");
  }
  return out;
}

// 3. boundary consistency across every shared circle
Outcome criterion_boundary() {
  Outcome out;
  Scheme rosay(SchemeKind::rosay);
  double worst = 0.0;
  for (int n = 2; n <= 40; ++n) worst = std::max(worst, boundary_consistency(rosay, step(), n, 16));
  out.require(worst <= 1e-10, "rosay worst discrepancy " + fmt(worst));
  Scheme loglog(SchemeKind::loglog);
  loglog.prepopulate(122);
  worst = 0.0;
  for (int n = 2; n <= 120; ++n) worst = std::max(worst, boundary_consistency(loglog, step(), n, 16));
  out.require(worst <= 1e-10, "loglog worst discrepancy " + fmt(worst));
  return out;
}

// 4. the system identity u_zbar = Q u_z and the Frobenius identity
Outcome criterion_identity() {
  Outcome out;
  for (SchemeKind kind : {SchemeKind::rosay, SchemeKind::loglog}) {
    Scheme s(kind);
    int n_lo = kind == SchemeKind::rosay ? 2 : 4;
    int n_hi = kind == SchemeKind::rosay ? 60 : 200;
    s.prepopulate(n_hi + 2);
    double worst_res = 0.0, worst_frob = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
      for (double f : {0.25, 0.5, 0.75}) {
        double r = s.radius(n + 1) + f * s.delta_r(n);
        for (int q = 0; q < 17; ++q) {
          LogComplex z = lc_from_polar_log(std::log(r), 2.0 * std::numbers::pi * q / 17.0);
          UJet jet = u_jet_on(s, step(), n, z);
          QMatrix m = q_matrix(jet);
          worst_res = std::max(worst_res, residual_identity(jet, m));
          double expected = lc_norm_pair(jet.u1.d_zbar, jet.u2.d_zbar) - lc_norm_pair(jet.u1.d_z, jet.u2.d_z);
          if (expected == kLogZero && m.log_frobenius_sq == kLogZero) continue;
          worst_frob = std::max(worst_frob, std::fabs(m.log_frobenius_sq - expected));
        }
      }
    }
    out.require(worst_res <= 1e-10, std::string(to_string(kind)) + " residual " + fmt(worst_res));
    out.require(worst_frob <= 1e-10, std::string(to_string(kind)) + " frobenius " + fmt(worst_frob));
  }
  return out;
}

// 5. smoothness criterion decay and hypothesis boundedness
Outcome criterion_smoothness() {
  Outcome out;
  {
    SuiteConfig cfg = SuiteConfig::defaults(SchemeKind::rosay);
    cfg.n_lo = 1;
    cfg.n_hi = 60;
    cfg.k_max = 5;
    Scheme s(cfg.kind);
    SuiteRecord rec = suite_smoothness_criterion(s, step(), cfg);
    out.require(rec.verdict, "rosay suite verdict");
    out.require(constant_of(rec, "hyp_sup") == 1.0 && constant_of(rec, "hyp_min") == 1.0,
                "rosay hypothesis ratio not exactly 1");
  }
  {
    SuiteConfig cfg = SuiteConfig::defaults(SchemeKind::loglog);
    cfg.n_lo = 4;
    cfg.n_hi = 120;
    cfg.k_max = 5;
    Scheme s(cfg.kind);
    SuiteRecord rec = suite_smoothness_criterion(s, step(), cfg);
    out.require(rec.verdict, "loglog suite verdict");
    out.require(constant_of(rec, "hyp_sup") <= 2.0, "loglog hypothesis sup " + fmt(constant_of(rec, "hyp_sup")));
  }
  return out;
}

// 6. ratio normalization bounded: last-half sup within 1.1x of first-half sup
Outcome criterion_ratio() {
  Outcome out;
  {
    SuiteConfig cfg = SuiteConfig::defaults(SchemeKind::rosay);
    cfg.n_lo = 2;
    cfg.n_hi = 60;
    Scheme s(cfg.kind);
    SuiteRecord rec = suite_ratio_rosay(s, step(), cfg);
    out.require(rec.verdict && std::isfinite(constant_of(rec, "C1")),
                "rosay trend: first " + fmt(constant_of(rec, "first_half_sup")) + " last " +
                    fmt(constant_of(rec, "last_half_sup")));
  }
  {
    SuiteConfig cfg = SuiteConfig::defaults(SchemeKind::loglog);
    cfg.n_lo = 4;
    cfg.n_hi = 200;
    Scheme s(cfg.kind);
    s.prepopulate(202);
    SuiteRecord rec = suite_ratio_loglog(s, step(), cfg);
    out.require(rec.verdict && std::isfinite(constant_of(rec, "C5")),
                "loglog trend: first " + fmt(constant_of(rec, "first_half_sup")) + " last " +
                    fmt(constant_of(rec, "last_half_sup")));
  }
  return out;
}

// 7. flatness of u and of the Q entries at the 1e-30 threshold
Outcome criterion_flatness() {
  Outcome out;
  for (SchemeKind kind : {SchemeKind::rosay, SchemeKind::loglog}) {
    SuiteConfig cfg = SuiteConfig::defaults(kind);
    cfg.n_lo = kind == SchemeKind::rosay ? 1 : 4;
    cfg.n_hi = kind == SchemeKind::rosay ? 60 : 120;
    cfg.k_max = 10;
    Scheme s(cfg.kind);
    s.prepopulate(cfg.n_hi + 2);
    SuiteRecord rec = suite_flatness(s, step(), cfg);
    bool u_ok = constant_of(rec, "u_pass") == 1.0;
    bool q_ok = constant_of(rec, "q_pass") == 1.0;
    out.require(u_ok, std::string(to_string(kind)) + " map flatness");
    out.require(q_ok, std::string(to_string(kind)) + " Q-entry flatness (final k=10 value exp(" +
                          fmt(constant_of(rec, "q_final_k10")) + "), threshold 1e-30 unreachable at desk scale)");
  }
  return out;
}

// 8. Lipschitz failure growth at the midline points
Outcome criterion_q22_growth() {
  Outcome out;
  SuiteConfig cfg = SuiteConfig::defaults(SchemeKind::loglog);
  cfg.n_lo = 12;
  cfg.n_hi = 200;
  Scheme s(cfg.kind);
  s.prepopulate(202);
  SuiteRecord rec = suite_q22_growth(s, step(), cfg);
  out.require(constant_of(rec, "increasing_last_half") == 1.0, "y_n not increasing on the last half");
  out.require(constant_of(rec, "growth_factor") >= 2.0,
              "final/midpoint factor " + fmt(constant_of(rec, "growth_factor")) +
                  " < 2 (y_n = |dq22| x_n^3 converges to a constant)");
  out.require(constant_of(rec, "c") > 0.0, "no positive lower constant for |dq22|/(ln(n+2))^3");
  out.require(constant_of(rec, "dominance_n0") >= 0.0, "term3 never dominates");
  return out;
}

// 9. closed forms vs finite-difference oracles
Outcome criterion_fd_oracle() {
  Outcome out;
  for (SchemeKind kind : {SchemeKind::rosay, SchemeKind::loglog}) {
    SuiteConfig cfg = SuiteConfig::defaults(kind);
    Scheme s(kind);
    SuiteRecord rec = suite_fd_oracle(s, step(), cfg);
    out.require(rec.verdict, std::string(to_string(kind)) + " fd errors: first " +
                                 fmt(std::max(constant_of(rec, "max_chi_first"), constant_of(rec, "max_u_first"))) +
                                 " second " +
                                 fmt(std::max(constant_of(rec, "max_chi_second"), constant_of(rec, "max_u_second"))) +
                                 " dq22 " + fmt(constant_of(rec, "max_dq22")));
  }
  return out;
}

// 10. byte-identical reports from identical invocations
Outcome criterion_determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) {
    out.require(false, "no --cli path given");
    return out;
  }
  auto run = [&](const std::string& path) {
    std::string cmd = cli + " verify --scheme loglog --suite smoothness --suite calclemma --n-min 4 --n-max 60 --out " +
                      path + " 2> /dev/null";
    return std::system(cmd.c_str());
  };
  int rc_a = run("acc_det_a.json");
  int rc_b = run("acc_det_b.json");
  out.require(rc_a == 0 && rc_b == 0, "verify runs exited nonzero");
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp("acc_det_a.json");
  std::string b = slurp("acc_det_b.json");
  out.require(!a.empty(), "empty report");
  out.require(a == b, "reports differ between runs");
  return out;
}

struct Criterion {
  int id;
  const char* label;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc)
      selected = std::atoi(argv[++i]);
    else if (arg == "--cli" && i + 1 < argc)
      cli = argv[++i];
  }

  std::vector<Criterion> criteria = {
      {1, "step half-point constraints and exact plateaus", criterion_step},
      {2, "cutoff closed forms and finite differences", criterion_cutoff},
      {3, "boundary consistency across shared circles", criterion_boundary},
      {4, "system identity and Frobenius identity on the scan grid", criterion_identity},
      {5, "smoothness criterion decay and hypothesis bound", criterion_smoothness},
      {6, "derivative ratio normalization bounded", criterion_ratio},
      {7, "flatness of u and Q entries at 1e-30", criterion_flatness},
      {8, "Lipschitz-failure growth at midline points", criterion_q22_growth},
      {9, "finite-difference oracle agreement", criterion_fd_oracle},
      {10, "byte-identical verify reports", [&] { return criterion_determinism(cli); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (selected != 0 && c.id != selected) continue;
    Outcome out = c.run();
    std::printf("criterion %2d: %s - %s%s%s\n", c.id, out.pass ? "PASS" : "FAIL", c.label,
                out.detail.empty() ? "" : " - ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
