#include "flatzero/cutoff.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flatzero {

namespace {

void validate(const Annulus& a) {
  if (!(a.r_inner > 0.0) || !(a.r_outer > a.r_inner)) throw std::domain_error("annulus requires 0 < r_inner < r_outer");
}

// Real coefficient at direction phase; log-domain so 1/delta_r powers never
// overflow for thin annuli.
LogComplex dir_term(double coeff_log_mag, bool negative, double phase) {
  return lc_from_polar_log(coeff_log_mag, negative ? phase + std::numbers::pi : phase);
}

}  // namespace

ChiJet chi_jet(const SmoothStep& step, const Annulus& a, const LogComplex& z) {
  validate(a);
  if (lc_is_zero(z)) throw std::domain_error("chi_jet: z = 0 is outside every annulus");
  double abs_z = std::exp(z.log_mag);
  // One-ulp slack: |z| built from log(radius) can land a rounding step outside.
  if (abs_z < a.r_inner * (1.0 - 1e-12) || abs_z > a.r_outer * (1.0 + 1e-12))
    throw std::domain_error("chi_jet: |z| outside annulus");

  double dr = a.delta_r();
  double log_dr = std::log(dr);
  double t = (abs_z - a.r_inner) / dr;
  double theta = z.phase;
  const double log4 = std::log(4.0);

  ChiJet jet;
  jet.value = step.value(t);
  double sp = step.density(t);
  double spp = step.density_prime(t);

  // d_zbar = s'(t) z / (2|z| dr): magnitude s'/(2 dr), direction arg z.
  jet.d_zbar = sp == 0.0 ? lc_zero() : lc_from_polar_log(std::log(sp) - std::log(2.0) - log_dr, theta);
  jet.d_z = lc_conj(jet.d_zbar);

  // d_zbarzbar = s'' z^2/(4|z|^2 dr^2) - s' z^2/(4|z|^3 dr).
  LogComplex curv = spp == 0.0 ? lc_zero()
                               : dir_term(std::log(std::fabs(spp)) - log4 - 2.0 * log_dr, spp < 0.0, 2.0 * theta);
  LogComplex slope = sp == 0.0 ? lc_zero()
                               : dir_term(std::log(sp) - log4 - z.log_mag - log_dr, true, 2.0 * theta);
  jet.d_zbarzbar = lc_add({curv, slope});
  jet.d_zz = lc_conj(jet.d_zbarzbar);

  // d_zzbar = s''/(4 dr^2) + s'/(4|z| dr): real.
  LogComplex mixed_a = spp == 0.0 ? lc_zero() : dir_term(std::log(std::fabs(spp)) - log4 - 2.0 * log_dr, spp < 0.0, 0.0);
  LogComplex mixed_b = sp == 0.0 ? lc_zero() : lc_from_polar_log(std::log(sp) - log4 - z.log_mag - log_dr, 0.0);
  jet.d_zzbar = lc_add({mixed_a, mixed_b});
  return jet;
}

double chi_bound_estimate(const SmoothStep& step, const Annulus& a, int dz_order, int dzbar_order, int samples) {
  validate(a);
  if (samples < 16) throw std::invalid_argument("chi_bound_estimate: samples must be >= 16");
  int k = dz_order + dzbar_order;
  if (dz_order < 0 || dzbar_order < 0 || k > 2)
    throw std::invalid_argument("chi_bound_estimate: order pair must satisfy i + j <= 2");

  constexpr int kAngles = 8;
  double log_dr = std::log(a.delta_r());
  double sup = 0.0;
  for (int m = 0; m < samples; ++m) {
    double t = (m + 0.5) / samples;
    double abs_z = a.r_inner + t * a.delta_r();
    double log_abs = std::log(abs_z);
    for (int q = 0; q < kAngles; ++q) {
      LogComplex z = lc_from_polar_log(log_abs, 2.0 * std::numbers::pi * q / kAngles);
      ChiJet jet = chi_jet(step, a, z);
      LogComplex entry;
      if (k == 0)
        entry = lc_from_real(jet.value);
      else if (dz_order == 1 && dzbar_order == 0)
        entry = jet.d_z;
      else if (dz_order == 0 && dzbar_order == 1)
        entry = jet.d_zbar;
      else if (dz_order == 2 && dzbar_order == 0)
        entry = jet.d_zz;
      else if (dz_order == 1 && dzbar_order == 1)
        entry = jet.d_zzbar;
      else
        entry = jet.d_zbarzbar;
      if (lc_is_zero(entry)) continue;
      double weighted = entry.log_mag + 2.0 * k * log_abs + k * log_dr;
      double v = std::exp(weighted);
      if (v > sup) sup = v;
    }
  }
  return sup;
}

}  // namespace flatzero
