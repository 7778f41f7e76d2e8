// Command-line surface: point evaluation, annular grid scans, verification
// suites and SVG charts.
//
// Exit codes: 0 success / all suites pass, 1 suite failure, 2 usage or domain
// error, 3 I/O error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flatzero/beltrami.hpp"
#include "flatzero/csv.hpp"
#include "flatzero/map_jet.hpp"
#include "flatzero/scheme.hpp"
#include "flatzero/svg.hpp"
#include "flatzero/verify.hpp"

namespace {

using namespace flatzero;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string lc_str(const LogComplex& v) {
  if (lc_is_zero(v)) return "zero";
  return "(" + fmt(v.log_mag) + ", " + fmt(v.phase) + ")";
}

SchemeKind parse_kind(const std::string& name) {
  auto kind = scheme_kind_from_string(name);
  if (!kind) throw std::domain_error("unknown scheme: " + name + " (expected rosay or loglog)");
  return *kind;
}

int cmd_eval(const std::string& scheme_name, double r, double theta) {
  SchemeKind kind = parse_kind(scheme_name);
  if (r == 0.0) throw std::domain_error("origin excluded: u(0) = 0 by definition but carries no annulus");
  if (!(r > 0.0)) throw std::domain_error("--r must be positive");
  Scheme scheme(kind);
  SmoothStep step = build_step(1e-12);
  LogComplex z = lc_from_polar_log(std::log(r), theta);
  auto n = scheme.annulus_of(z.log_mag);
  if (!n) throw std::domain_error("origin excluded");

  UJet jet = u_jet(scheme, step, z);
  QMatrix q = q_matrix(jet);
  std::cout << "scheme       " << to_string(kind) << "\n"
            << "annulus n    " << *n << "\n"
            << "|z|          " << fmt(r) << "   arg z " << fmt(z.phase) << "\n"
            << "entries as (log magnitude, phase)\n";
  const char* names[6] = {"value", "d_z", "d_zbar", "d_zz", "d_zzbar", "d_zbarzbar"};
  const ComponentJet* comps[2] = {&jet.u1, &jet.u2};
  for (int c = 0; c < 2; ++c) {
    const LogComplex* entries[6] = {&comps[c]->value, &comps[c]->d_z,     &comps[c]->d_zbar,
                                    &comps[c]->d_zz,  &comps[c]->d_zzbar, &comps[c]->d_zbarzbar};
    for (int e = 0; e < 6; ++e)
      std::cout << "u" << c + 1 << "." << names[e] << std::string(12 - std::string(names[e]).size(), ' ')
                << lc_str(*entries[e]) << "\n";
  }
  std::cout << "q11          " << lc_str(q.q11) << "\n"
            << "q12          " << lc_str(q.q12) << "\n"
            << "q21          " << lc_str(q.q21) << "\n"
            << "q22          " << lc_str(q.q22) << "\n"
            << "log|Q|_F^2   " << fmt(q.log_frobenius_sq) << "\n"
            << "log ratio    " << fmt(ratio_first_derivatives(scheme, step, z)) << "\n";
  return 0;
}

int cmd_scan(const std::string& scheme_name, int n_lo, int n_hi, int angles, const std::string& out_path) {
  SchemeKind kind = parse_kind(scheme_name);
  Scheme scheme(kind);
  scheme.prepopulate(n_hi + 2);
  SmoothStep step = build_step(1e-12);
  std::vector<ScanRow> rows = scan_grid(scheme, step, n_lo, n_hi, angles);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open for writing: " << out_path << "\n";
    return 3;
  }
  write_scan_csv(out, rows);
  out.flush();
  if (!out) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return 3;
  }
  return 0;
}

int cmd_verify(const std::string& scheme_name, std::vector<std::string> suite_names, SuiteConfig cfg,
               bool user_range, const std::string& out_path) {
  cfg.kind = parse_kind(scheme_name);
  if (!user_range) {
    SuiteConfig d = SuiteConfig::defaults(cfg.kind);
    cfg.n_lo = d.n_lo;
    cfg.n_hi = d.n_hi;
  }
  if (suite_names.empty()) suite_names = default_suites(cfg.kind);
  // each requested suite appears exactly once, first mention wins
  std::vector<std::string> unique_names;
  for (const auto& name : suite_names)
    if (std::find(unique_names.begin(), unique_names.end(), name) == unique_names.end()) unique_names.push_back(name);
  suite_names = std::move(unique_names);
  for (const auto& name : suite_names) {
    if (!is_known_suite(name)) throw std::domain_error("unknown suite: " + name);
    if (name == "q22growth" && cfg.kind != SchemeKind::loglog)
      throw std::domain_error("suite q22growth requires --scheme loglog");
    if (name == "fdoracle" && !cfg.fd_enabled) throw std::domain_error("suite fdoracle requires fd enabled");
  }
  if (!cfg.fd_enabled) std::erase(suite_names, std::string("fdoracle"));

  VerificationReport report = run_suites(cfg, suite_names);
  std::string text = report_to_json(report).dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open for writing: " << out_path << "\n";
      return 3;
    }
    out << text;
    out.flush();
    if (!out) {
      std::cerr << "error: write failed: " << out_path << "\n";
      return 3;
    }
  }
  for (const auto& s : report.suites)
    std::cerr << (s.verdict ? "pass" : "FAIL") << "  " << s.name << "\n";
  return report.all_pass() ? 0 : 1;
}

int cmd_plot(const std::string& in_path, const std::string& x_col, const std::string& y_col, bool log_scale,
             const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "error: cannot read: " << in_path << "\n";
    return 3;
  }
  CsvTable table = read_csv(in);
  ChartSpec spec{x_col, y_col, log_scale};
  std::ostringstream svg;
  write_chart_svg(svg, table, spec);  // throws before the output file is touched
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open for writing: " << out_path << "\n";
    return 3;
  }
  out << svg.str();
  out.flush();
  if (!out) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for flat maps of a planar Beltrami-type system"};
  app.require_subcommand(1);

  std::string scheme_name = "loglog";
  double r = 0.0, theta = 0.0;
  int n_lo = 0, n_hi = 0, angles = 17, k_max = 5;
  std::string out_path, in_path, x_col, y_col;
  bool log_scale = false, no_fd = false;
  std::vector<std::string> suites;
  SuiteConfig cfg;

  auto* eval = app.add_subcommand("eval", "print the order-2 jet and Q matrix at one point");
  eval->add_option("--scheme", scheme_name, "rosay|loglog")->required();
  eval->add_option("--r", r, "|z|")->required();
  eval->add_option("--theta", theta, "arg z in radians");

  auto* scan = app.add_subcommand("scan", "write the annular sample grid as CSV");
  scan->add_option("--scheme", scheme_name, "rosay|loglog")->required();
  scan->add_option("--n-min", n_lo, "first annulus index")->required();
  scan->add_option("--n-max", n_hi, "last annulus index")->required();
  scan->add_option("--angles", angles, "angle samples per circle");
  scan->add_option("--out", out_path, "output CSV path")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("--scheme", scheme_name, "rosay|loglog")->required();
  auto* opt_nlo = verify->add_option("--n-min", n_lo, "first annulus index");
  auto* opt_nhi = verify->add_option("--n-max", n_hi, "last annulus index");
  verify->add_option("--angles", angles, "angle samples per circle");
  verify->add_option("--k-max", k_max, "max derivative/flatness order");
  verify->add_option("--suite", suites, "suite name (repeatable): ratio flatness smoothness q22growth fdoracle calclemma");
  verify->add_option("--out", out_path, "report path (stdout when omitted)");
  verify->add_flag("--no-fd", no_fd, "disable finite-difference suites");
  for (const char* name : {"ratio-trend", "flat", "smooth-drop", "hyp-max", "q22-growth", "fd-first", "fd-second",
                           "calclemma-end"}) {
    std::string key(name);
    std::string flag = "--tol-" + key;
    std::replace(key.begin(), key.end(), '-', '_');
    verify
        ->add_option_function<double>(
            flag, [&cfg, key](const double& v) { cfg.set_tolerance(key, v); }, "override tolerance " + key)
        ->expected(1);
  }

  auto* plot = app.add_subcommand("plot", "render a CSV as a single-panel SVG chart");
  plot->add_option("--in", in_path, "input CSV")->required();
  plot->add_option("--x", x_col, "x column name")->required();
  plot->add_option("--y", y_col, "y column name")->required();
  plot->add_option("--out", out_path, "output SVG path")->required();
  plot->add_flag("--logscale", log_scale, "log10 scale on y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(scheme_name, r, theta);
    if (scan->parsed()) {
      if (n_lo < 1 || n_hi < n_lo) throw std::domain_error("invalid n range");
      if (angles < 1) throw std::domain_error("--angles must be >= 1");
      return cmd_scan(scheme_name, n_lo, n_hi, angles, out_path);
    }
    if (verify->parsed()) {
      cfg.angle_samples = angles;
      cfg.k_max = k_max;
      cfg.fd_enabled = !no_fd;
      bool user_range = opt_nlo->count() > 0 || opt_nhi->count() > 0;
      if (user_range) {
        if (opt_nlo->count() == 0 || opt_nhi->count() == 0)
          throw std::domain_error("--n-min and --n-max must be given together");
        cfg.n_lo = n_lo;
        cfg.n_hi = n_hi;
        if (n_lo < 1 || n_hi < n_lo) throw std::domain_error("invalid n range");
      }
      return cmd_verify(scheme_name, suites, cfg, user_range, out_path);
    }
    if (plot->parsed()) return cmd_plot(in_path, x_col, y_col, log_scale, out_path);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
