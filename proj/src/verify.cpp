#include "flatzero/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "flatzero/beltrami.hpp"
#include "flatzero/cutoff.hpp"
#include "flatzero/finite_diff.hpp"
#include "flatzero/map_jet.hpp"

namespace flatzero {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<std::pair<std::string, double>>& default_tolerances() {
  static const std::vector<std::pair<std::string, double>> kDefaults = {
      {"ratio_trend", 1.1},      // last-half sup may exceed first-half sup by at most this factor
      {"flat", 1e-30},           // flatness sequences must fall below this within range
      {"smooth_drop", 100.0},    // smoothness criterion must end below -smooth_drop (log scale)
      {"hyp_max", 2.0},          // bound on the collar-ratio hypothesis sequence
      {"q22_growth", 2.0},       // required final/midpoint factor for |dq22| x^3
      {"fd_first", 1e-5},        // FD agreement, first derivatives
      {"fd_second", 1e-3},       // FD agreement, second derivatives and the dq22 expansion
      {"calclemma_end", 0.1},    // required end value of n (lnln(n+2) - lnln n)
  };
  return kDefaults;
}

double half_split_first(const std::vector<double>& per_n_max, bool last_half) {
  std::size_t half = per_n_max.size() / 2;
  double sup = 0.0;
  std::size_t lo = last_half ? half : 0;
  std::size_t hi = last_half ? per_n_max.size() : half;
  for (std::size_t i = lo; i < hi; ++i) sup = std::max(sup, per_n_max[i]);
  return sup;
}

// Smallest index m such that v is strictly decreasing from m through the end;
// v.size()-1 when no final decrease exists at all.
std::size_t strict_decrease_onset(const std::vector<double>& v) {
  if (v.size() < 2) return v.empty() ? 0 : v.size() - 1;
  std::size_t m = v.size() - 1;
  while (m > 0 && v[m - 1] > v[m]) --m;
  return m;
}

struct RadialFractions {
  static constexpr double values[3] = {0.25, 0.5, 0.75};
};

double angle_of(int index, int count) { return 2.0 * std::numbers::pi * index / count; }

}  // namespace

double SuiteConfig::tolerance(std::string_view name) const {
  for (const auto& [k, v] : tolerances)
    if (k == name) return v;
  for (const auto& [k, v] : default_tolerances())
    if (k == name) return v;
  throw std::invalid_argument("SuiteConfig: unknown tolerance name: " + std::string(name));
}

void SuiteConfig::set_tolerance(std::string_view name, double value) {
  if (!(value > 0.0)) throw std::invalid_argument("SuiteConfig: tolerances must be positive");
  for (auto& [k, v] : tolerances) {
    if (k == name) {
      v = value;
      return;
    }
  }
  tolerances.emplace_back(std::string(name), value);
}

SuiteConfig SuiteConfig::defaults(SchemeKind kind) {
  SuiteConfig cfg;
  cfg.kind = kind;
  if (kind == SchemeKind::rosay) {
    cfg.n_lo = 2;
    cfg.n_hi = 60;
  } else {
    cfg.n_lo = 4;
    cfg.n_hi = 200;
  }
  return cfg;
}

bool VerificationReport::all_pass() const {
  for (const auto& s : suites)
    if (!s.verdict) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ratio suites

namespace {

SuiteRecord ratio_suite_impl(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg) {
  SuiteRecord rec;
  rec.name = "ratio";
  const bool rosay = scheme.kind() == SchemeKind::rosay;
  rec.columns = rosay ? std::vector<std::string>{"n", "max_norm", "max_ratio_n"}
                      : std::vector<std::string>{"n", "max_norm", "max_c4"};

  std::vector<double> per_n;
  double sup_norm = 0.0, sup_aux = 0.0;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    double best_norm = 0.0, best_aux = 0.0;
    for (double f : RadialFractions::values) {
      double r = scheme.radius(n + 1) + f * scheme.delta_r(n);
      double lr = std::log(r);
      for (int a = 0; a < cfg.angle_samples; ++a) {
        LogComplex z = lc_from_polar_log(lr, angle_of(a, cfg.angle_samples));
        double lrat = ratio_first_derivatives(scheme, step, z);
        if (lrat == -kInf) continue;  // flat collar samples contribute 0
        double ratio = std::exp(lrat);
        if (rosay) {
          best_norm = std::max(best_norm, ratio * (-lr / std::numbers::ln2));
          best_aux = std::max(best_aux, ratio * n);
        } else {
          best_norm = std::max(best_norm, std::exp(lrat + 2.0 * lr + 1.0 / r));
          best_aux = std::max(best_aux, ratio * n / std::pow(std::log(n + 2.0), 2));
        }
      }
    }
    rec.rows.push_back({double(n), best_norm, best_aux});
    per_n.push_back(best_norm);
    sup_norm = std::max(sup_norm, best_norm);
    sup_aux = std::max(sup_aux, best_aux);
  }

  double first = half_split_first(per_n, false);
  double last = half_split_first(per_n, true);
  rec.add_constant(rosay ? "C1" : "C5", sup_norm);
  rec.add_constant(rosay ? "sup_ratio_n" : "C4", sup_aux);
  rec.add_constant("first_half_sup", first);
  rec.add_constant("last_half_sup", last);
  rec.verdict = std::isfinite(sup_norm) && last <= cfg.tolerance("ratio_trend") * first;
  return rec;
}

}  // namespace

SuiteRecord suite_ratio_rosay(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg) {
  if (scheme.kind() != SchemeKind::rosay) throw std::domain_error("suite_ratio_rosay: wrong scheme kind");
  return ratio_suite_impl(scheme, step, cfg);
}

SuiteRecord suite_ratio_loglog(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg) {
  if (scheme.kind() != SchemeKind::loglog) throw std::domain_error("suite_ratio_loglog: wrong scheme kind");
  return ratio_suite_impl(scheme, step, cfg);
}

SuiteRecord suite_ratio(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg) {
  return ratio_suite_impl(scheme, step, cfg);
}

// ---------------------------------------------------------------------------
// flatness

SuiteRecord suite_flatness(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg) {
  SuiteRecord rec;
  rec.name = "flatness";
  rec.columns = {"k", "n", "u_val", "q_val"};

  struct Sample {
    double neg_log_abs;
    double log_u;
    double log_q;
  };
  // One pass over the grid; the k-weights recombine the cached samples.
  std::vector<std::vector<Sample>> samples(cfg.n_hi - cfg.n_lo + 1);
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    for (double f : RadialFractions::values) {
      double r = scheme.radius(n + 1) + f * scheme.delta_r(n);
      double lr = std::log(r);
      double lu = -kInf, lq = -kInf;
      for (int a = 0; a < cfg.angle_samples; ++a) {
        LogComplex z = lc_from_polar_log(lr, angle_of(a, cfg.angle_samples));
        UJet jet = u_jet_on(scheme, step, n, z);
        lu = std::max(lu, 0.5 * lc_norm_pair(jet.u1.value, jet.u2.value));
        QMatrix q = q_matrix(jet);
        for (const LogComplex* e : {&q.q11, &q.q12, &q.q21, &q.q22}) lq = std::max(lq, e->log_mag);
      }
      samples[n - cfg.n_lo].push_back({-lr, lu, lq});
    }
  }

  double log_tol = std::log(cfg.tolerance("flat"));
  bool u_pass = true, q_pass = true;
  for (int k = 0; k <= cfg.k_max; ++k) {
    std::vector<double> u_seq, q_seq;
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      double vu = -kInf, vq = -kInf;
      for (const Sample& s : samples[n - cfg.n_lo]) {
        vu = std::max(vu, k * s.neg_log_abs + s.log_u);
        vq = std::max(vq, k * s.neg_log_abs + s.log_q);
      }
      rec.rows.push_back({double(k), double(n), vu, vq});
      u_seq.push_back(vu);
      q_seq.push_back(vq);
    }
    auto summarize = [&](const std::vector<double>& seq, const char* prefix, bool& pass) {
      std::size_t onset = strict_decrease_onset(seq);
      bool decreasing = onset + 1 < seq.size();
      auto cross = std::find_if(seq.begin(), seq.end(), [&](double v) { return v < log_tol; });
      bool crossed = cross != seq.end();
      rec.add_constant(std::string(prefix) + "_n0_k" + std::to_string(k), double(cfg.n_lo + onset));
      rec.add_constant(std::string(prefix) + "_cross_k" + std::to_string(k),
                       crossed ? double(cfg.n_lo + (cross - seq.begin())) : -1.0);
      rec.add_constant(std::string(prefix) + "_final_k" + std::to_string(k), seq.back());
      pass = pass && decreasing && crossed;
    };
    summarize(u_seq, "u", u_pass);
    summarize(q_seq, "q", q_pass);
  }
  rec.add_constant("u_pass", u_pass ? 1.0 : 0.0);
  rec.add_constant("q_pass", q_pass ? 1.0 : 0.0);
  rec.verdict = u_pass && q_pass;
  return rec;
}

// ---------------------------------------------------------------------------
// smoothness criterion

SuiteRecord suite_smoothness_criterion(const Scheme& scheme, const SmoothStep&, const SuiteConfig& cfg) {
  SuiteRecord rec;
  rec.name = "smoothness";
  rec.columns = {"k", "n", "value", "hyp_ratio"};

  double drop = cfg.tolerance("smooth_drop");
  double hyp_sup = 0.0, hyp_min = kInf;
  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    double h = scheme.hypothesis_ratio(n);
    hyp_sup = std::max(hyp_sup, h);
    hyp_min = std::min(hyp_min, h);
  }

  bool pass = true;
  for (int k = 0; k <= cfg.k_max; ++k) {
    int n_start = std::max(cfg.n_lo, scheme.n_min());
    while (n_start <= cfg.n_hi && scheme.degree(n_start + 1) <= 4ll * k) ++n_start;
    if (n_start > cfg.n_hi) {
      pass = false;  // exponent regime never became valid inside the range
      rec.add_constant("n0_k" + std::to_string(k), -1.0);
      continue;
    }
    std::vector<double> seq;
    for (int n = n_start; n <= cfg.n_hi; ++n) {
      double v = scheme.smoothness_criterion(n, k);
      rec.rows.push_back({double(k), double(n), v, scheme.hypothesis_ratio(n)});
      seq.push_back(v);
    }
    std::size_t onset = strict_decrease_onset(seq);
    bool decreasing = onset + 1 < seq.size();
    rec.add_constant("n0_k" + std::to_string(k), double(n_start + onset));
    rec.add_constant("final_k" + std::to_string(k), seq.back());
    pass = pass && decreasing && seq.back() < -drop;
  }
  rec.add_constant("hyp_sup", hyp_sup);
  rec.add_constant("hyp_min", hyp_min);
  rec.verdict = pass && hyp_sup <= cfg.tolerance("hyp_max");
  return rec;
}

// ---------------------------------------------------------------------------
// q22 growth (Lipschitz failure)

SuiteRecord suite_q22_growth(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg) {
  if (scheme.kind() != SchemeKind::loglog) throw std::domain_error("suite_q22_growth: requires the loglog scheme");
  SuiteRecord rec;
  rec.name = "q22growth";
  rec.columns = {"n", "x_n", "log_total", "y", "w", "t3_minus_t1", "t3_minus_t2"};

  int n_start = std::max(cfg.n_lo, 12);
  if (n_start % 2 != 0) ++n_start;
  std::vector<double> ys, ws;
  std::vector<bool> dominant;
  for (int n = n_start; n <= cfg.n_hi; n += 2) {
    double x = scheme.radius(n + 1) + 0.5 * scheme.delta_r(n);
    UJet jet = u_jet_on(scheme, step, n, lc_from_polar_log(std::log(x), 0.0));
    Q22Derivative d = dq22_dzbar(jet);
    double y = std::exp(d.total.log_mag + 3.0 * std::log(x));
    double w = std::exp(d.total.log_mag) / std::pow(std::log(n + 2.0), 3);
    double m31 = d.term3.log_mag - d.term1.log_mag;
    double m32 = d.term3.log_mag - d.term2.log_mag;
    rec.rows.push_back({double(n), x, d.total.log_mag, y, w, m31, m32});
    ys.push_back(y);
    ws.push_back(w);
    dominant.push_back(m31 > 0.0 && m32 > 0.0);
  }
  if (ys.size() < 4) throw std::domain_error("suite_q22_growth: range too short");

  std::size_t half = ys.size() / 2;
  bool increasing = true;
  for (std::size_t i = half; i + 1 < ys.size(); ++i) increasing = increasing && ys[i + 1] > ys[i];
  double c = kInf;
  for (std::size_t i = half; i < ws.size(); ++i) c = std::min(c, ws[i]);
  double growth = ys.back() / ys[half];
  // Dominance threshold: earliest even n from which term3 stays on top.
  std::size_t dom_onset = dominant.size();
  for (std::size_t i = dominant.size(); i-- > 0;) {
    if (!dominant[i]) break;
    dom_onset = i;
  }
  bool dominance = dom_onset < dominant.size();

  rec.add_constant("y_mid", ys[half]);
  rec.add_constant("y_final", ys.back());
  rec.add_constant("growth_factor", growth);
  rec.add_constant("c", c);
  rec.add_constant("dominance_n0", dominance ? double(n_start + 2 * dom_onset) : -1.0);
  rec.add_constant("increasing_last_half", increasing ? 1.0 : 0.0);
  rec.verdict = increasing && growth >= cfg.tolerance("q22_growth") && c > 0.0 && dominance;
  return rec;
}

// ---------------------------------------------------------------------------
// finite-difference oracle

namespace {

struct FdErrors {
  double first = 0.0;
  double second = 0.0;
};

// Scale-relative error: zero analytic entries are compared against the
// largest entry of the same derivative order, not against themselves.
double entry_error(std::complex<double> an, std::complex<double> fd, double scale) {
  return std::abs(an - fd) / std::max(std::abs(an), scale);
}

FdErrors fd_check_component(const Scheme& scheme, const SmoothStep& step, int n, double theta, bool first_component) {
  double r = scheme.radius(n + 1) + 0.5 * scheme.delta_r(n);
  LogComplex z0 = lc_from_polar_log(std::log(r), theta);
  UJet jet = u_jet_on(scheme, step, n, z0);
  const ComponentJet& comp = first_component ? jet.u1 : jet.u2;

  double sigma = -kInf;
  for (const LogComplex* e : {&comp.value, &comp.d_z, &comp.d_zbar, &comp.d_zz, &comp.d_zzbar, &comp.d_zbarzbar})
    sigma = std::max(sigma, e->log_mag);

  auto rescaled = [&](const LogComplex& e) {
    LogComplex t = e;
    if (!lc_is_zero(t)) t.log_mag -= sigma;
    return lc_to_complex(t);
  };
  double x0 = r * std::cos(theta), y0 = r * std::sin(theta);
  auto value_at = [&](double x, double y) {
    LogComplex z = lc_from_complex({x, y});
    UJet j = u_jet_on(scheme, step, n, z);
    return rescaled(first_component ? j.u1.value : j.u2.value);
  };

  double scale_len = std::min(scheme.delta_r(n), r / double(scheme.degree(n + 1)));
  WirtingerFirst f1 = fd_wirtinger_first(value_at, x0, y0, 3e-4 * scale_len, 2);
  WirtingerSecond f2 = fd_wirtinger_second(value_at, x0, y0, 3e-3 * scale_len, 2);

  double s1 = std::max(std::abs(rescaled(comp.d_z)), std::abs(rescaled(comp.d_zbar)));
  double s2 = std::max({std::abs(rescaled(comp.d_zz)), std::abs(rescaled(comp.d_zzbar)),
                        std::abs(rescaled(comp.d_zbarzbar))});
  FdErrors err;
  err.first = std::max(entry_error(rescaled(comp.d_z), f1.d_z, s1), entry_error(rescaled(comp.d_zbar), f1.d_zbar, s1));
  err.second = std::max({entry_error(rescaled(comp.d_zz), f2.d_zz, s2),
                         entry_error(rescaled(comp.d_zzbar), f2.d_zzbar, s2),
                         entry_error(rescaled(comp.d_zbarzbar), f2.d_zbarzbar, s2)});
  return err;
}

FdErrors fd_check_chi(const Scheme& scheme, const SmoothStep& step, int n, double frac) {
  Annulus a{scheme.radius(n + 1), scheme.radius(n)};
  double r = a.r_inner + frac * a.delta_r();
  double theta = 0.7;
  double x0 = r * std::cos(theta), y0 = r * std::sin(theta);
  ChiJet jet = chi_jet(step, a, lc_from_polar_log(std::log(r), theta));

  auto value_at = [&](double x, double y) {
    ChiJet j = chi_jet(step, a, lc_from_complex({x, y}));
    return std::complex<double>(j.value, 0.0);
  };
  double scale_len = a.delta_r();
  WirtingerFirst f1 = fd_wirtinger_first(value_at, x0, y0, 3e-4 * scale_len, 2);
  WirtingerSecond f2 = fd_wirtinger_second(value_at, x0, y0, 3e-3 * scale_len, 2);

  double s1 = std::abs(lc_to_complex(jet.d_z));
  double s2 = std::max({std::abs(lc_to_complex(jet.d_zz)), std::abs(lc_to_complex(jet.d_zzbar)),
                        std::abs(lc_to_complex(jet.d_zbarzbar))});
  FdErrors err;
  err.first = std::max(entry_error(lc_to_complex(jet.d_z), f1.d_z, s1),
                       entry_error(lc_to_complex(jet.d_zbar), f1.d_zbar, s1));
  err.second = std::max({entry_error(lc_to_complex(jet.d_zz), f2.d_zz, s2),
                         entry_error(lc_to_complex(jet.d_zzbar), f2.d_zzbar, s2),
                         entry_error(lc_to_complex(jet.d_zbarzbar), f2.d_zbarzbar, s2)});
  return err;
}

double fd_check_dq22(const Scheme& scheme, const SmoothStep& step, int n, double theta) {
  double r = scheme.radius(n + 1) + 0.5 * scheme.delta_r(n);
  LogComplex z0 = lc_from_polar_log(std::log(r), theta);
  UJet jet = u_jet_on(scheme, step, n, z0);
  Q22Derivative d = dq22_dzbar(jet);

  auto q_entry = [&](double x, double y) {
    UJet j = u_jet_on(scheme, step, n, lc_from_complex({x, y}));
    QMatrix q = q_matrix(j);
    return lc_to_complex(d.entry == 2 ? q.q22 : q.q11);
  };
  double x0 = r * std::cos(theta), y0 = r * std::sin(theta);
  double scale_len = std::min(scheme.delta_r(n), r / double(scheme.degree(n + 1)));
  WirtingerFirst f1 = fd_wirtinger_first(q_entry, x0, y0, 3e-4 * scale_len, 2);
  std::complex<double> an = lc_to_complex(d.total);
  return std::abs(an - f1.d_zbar) / std::abs(an);
}

// The rescaled Cartesian probe works when every jet entry sits within double
// range of the component's own scale.
bool fd_in_range(const Scheme& scheme, const SmoothStep& step, int n) {
  double r = scheme.radius(n + 1) + 0.5 * scheme.delta_r(n);
  UJet jet = u_jet_on(scheme, step, n, lc_from_polar_log(std::log(r), 0.7));
  for (const ComponentJet* c : {&jet.u1, &jet.u2}) {
    double sigma = -kInf;
    const LogComplex* entries[6] = {&c->value, &c->d_z, &c->d_zbar, &c->d_zz, &c->d_zzbar, &c->d_zbarzbar};
    for (const LogComplex* e : entries) sigma = std::max(sigma, e->log_mag);
    if (!std::isfinite(sigma)) return false;
    for (const LogComplex* e : entries)
      if (!lc_is_zero(*e) && std::fabs(e->log_mag - sigma) > 600.0) return false;
  }
  return true;
}

}  // namespace

SuiteRecord suite_fd_oracle(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg) {
  if (!cfg.fd_enabled) throw std::domain_error("suite_fd_oracle: fd_enabled is off");
  SuiteRecord rec;
  rec.name = "fdoracle";
  rec.columns = {"n", "theta", "chi_first", "chi_second", "u_first", "u_second", "dq22_err"};

  const int candidates[] = {3, 5, 8, 13, 21};
  const double thetas[] = {0.7, 2.3};
  double max_chi1 = 0.0, max_chi2 = 0.0, max_u1 = 0.0, max_u2 = 0.0, max_dq = 0.0;
  for (int n : candidates) {
    if (n < std::max(cfg.n_lo, scheme.n_min() + 1) || n > cfg.n_hi) continue;
    if (!fd_in_range(scheme, step, n)) continue;
    FdErrors chi_mid = fd_check_chi(scheme, step, n, 0.5);
    FdErrors chi_off = fd_check_chi(scheme, step, n, 0.37);
    double chi1 = std::max(chi_mid.first, chi_off.first);
    double chi2 = std::max(chi_mid.second, chi_off.second);
    for (double theta : thetas) {
      FdErrors a = fd_check_component(scheme, step, n, theta, true);
      FdErrors b = fd_check_component(scheme, step, n, theta, false);
      double u1 = std::max(a.first, b.first);
      double u2 = std::max(a.second, b.second);
      double dq = fd_check_dq22(scheme, step, n, theta);
      rec.rows.push_back({double(n), theta, chi1, chi2, u1, u2, dq});
      max_u1 = std::max(max_u1, u1);
      max_u2 = std::max(max_u2, u2);
      max_dq = std::max(max_dq, dq);
    }
    max_chi1 = std::max(max_chi1, chi1);
    max_chi2 = std::max(max_chi2, chi2);
  }
  rec.add_constant("max_chi_first", max_chi1);
  rec.add_constant("max_chi_second", max_chi2);
  rec.add_constant("max_u_first", max_u1);
  rec.add_constant("max_u_second", max_u2);
  rec.add_constant("max_dq22", max_dq);
  double tol1 = cfg.tolerance("fd_first");
  double tol2 = cfg.tolerance("fd_second");
  rec.verdict = !rec.rows.empty() && max_chi1 <= tol1 && max_u1 <= tol1 && max_chi2 <= tol2 && max_u2 <= tol2 &&
                max_dq <= tol2;
  return rec;
}

// ---------------------------------------------------------------------------
// calculus lemma: a_n = n (lnln(n+2) - lnln n) stays bounded and decays.

SuiteRecord suite_calculus_lemma(const Scheme&, const SmoothStep&, const SuiteConfig& cfg) {
  SuiteRecord rec;
  rec.name = "calclemma";
  rec.columns = {"n", "a_n"};

  auto a_of = [](double n) { return n * std::log1p(std::log1p(2.0 / n) / std::log(n)); };

  std::vector<double> seq;
  std::vector<double> grid;
  for (double n = 2.0; n <= 20.0; n += 1.0) grid.push_back(n);
  for (double n = 30.0; n < 1e9; n *= 1.5) grid.push_back(std::floor(n));
  grid.push_back(1e9);

  double sup = 0.0, sup_n = 0.0, a2 = 0.0;
  bool below_a2 = true;
  for (double n : grid) {
    double a = a_of(n);
    rec.rows.push_back({n, a});
    seq.push_back(a);
    if (n == 2.0) a2 = a;
    if (a > sup) {
      sup = a;
      sup_n = n;
    }
    if (n >= 10.0 && a >= a2) below_a2 = false;
  }
  std::size_t onset = strict_decrease_onset(seq);
  rec.add_constant("a2", a2);
  rec.add_constant("sup", sup);
  rec.add_constant("sup_n", sup_n);
  rec.add_constant("end_value", seq.back());
  rec.verdict = std::isfinite(sup) && onset + 1 < seq.size() && seq.back() < cfg.tolerance("calclemma_end") && below_a2;
  return rec;
}

// ---------------------------------------------------------------------------
// runner and serialization

bool is_known_suite(std::string_view name) {
  return name == "ratio" || name == "flatness" || name == "smoothness" || name == "q22growth" || name == "fdoracle" ||
         name == "calclemma";
}

std::vector<std::string> default_suites(SchemeKind kind) {
  std::vector<std::string> names = {"ratio", "flatness", "smoothness"};
  if (kind == SchemeKind::loglog) names.push_back("q22growth");
  names.push_back("fdoracle");
  names.push_back("calclemma");
  return names;
}

VerificationReport run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names) {
  if (cfg.n_lo > cfg.n_hi || cfg.n_lo < 1) throw std::invalid_argument("run_suites: empty or invalid n range");
  if (cfg.angle_samples < 4) throw std::invalid_argument("run_suites: angle_samples must be >= 4");
  for (const auto& name : names)
    if (!is_known_suite(name)) throw std::invalid_argument("run_suites: unknown suite: " + name);

  Scheme scheme(cfg.kind);
  scheme.prepopulate(cfg.n_hi + 2);
  SmoothStep step = build_step(cfg.quadrature_tol);

  VerificationReport report;
  report.kind = cfg.kind;
  report.config = cfg;
  for (const auto& name : names) {
    if (name == "ratio")
      report.suites.push_back(suite_ratio(scheme, step, cfg));
    else if (name == "flatness")
      report.suites.push_back(suite_flatness(scheme, step, cfg));
    else if (name == "smoothness")
      report.suites.push_back(suite_smoothness_criterion(scheme, step, cfg));
    else if (name == "q22growth")
      report.suites.push_back(suite_q22_growth(scheme, step, cfg));
    else if (name == "fdoracle")
      report.suites.push_back(suite_fd_oracle(scheme, step, cfg));
    else
      report.suites.push_back(suite_calculus_lemma(scheme, step, cfg));
  }
  return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["scheme"] = to_string(report.kind);
  nlohmann::ordered_json cfg;
  cfg["n_min"] = report.config.n_lo;
  cfg["n_max"] = report.config.n_hi;
  cfg["angle_samples"] = report.config.angle_samples;
  cfg["k_max"] = report.config.k_max;
  cfg["fd_enabled"] = report.config.fd_enabled;
  cfg["quadrature_tol"] = report.config.quadrature_tol;
  nlohmann::ordered_json tols;
  for (const auto& [name, value] : default_tolerances()) tols[name] = report.config.tolerance(name);
  cfg["tolerances"] = tols;
  j["config"] = cfg;

  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& s : report.suites) {
    nlohmann::ordered_json rec;
    rec["name"] = s.name;
    rec["verdict"] = s.verdict ? "pass" : "fail";
    nlohmann::ordered_json consts;
    for (const auto& [k, v] : s.constants) consts[k] = v;
    rec["constants"] = consts;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : s.rows) {
      nlohmann::ordered_json r;
      for (std::size_t i = 0; i < s.columns.size() && i < row.size(); ++i) r[s.columns[i]] = row[i];
      rows.push_back(r);
    }
    rec["rows"] = rows;
    suites.push_back(rec);
  }
  j["suites"] = suites;
  j["version"] = "0.1.0";
  return j;
}

}  // namespace flatzero
