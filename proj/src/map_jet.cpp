#include "flatzero/map_jet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "flatzero/cutoff.hpp"

namespace flatzero {

namespace {

struct MonomialJet {
  LogComplex value, d1, d2;
};

// c z^p with log c = log_amp; derivatives by the power rule, exact zeros when
// the degree runs out.
MonomialJet monomial_jet(double log_amp, long long p, const LogComplex& z) {
  MonomialJet m;
  double pd = static_cast<double>(p);
  m.value = lc_from_polar_log(log_amp + pd * z.log_mag, pd * z.phase);
  m.d1 = p >= 1 ? lc_from_polar_log(log_amp + std::log(pd) + (pd - 1.0) * z.log_mag, (pd - 1.0) * z.phase) : lc_zero();
  m.d2 = p >= 2 ? lc_from_polar_log(log_amp + std::log(pd) + std::log(pd - 1.0) + (pd - 2.0) * z.log_mag,
                                    (pd - 2.0) * z.phase)
                : lc_zero();
  return m;
}

}  // namespace

UJet u_jet_on(const Scheme& scheme, const SmoothStep& step, int n, const LogComplex& z) {
  if (lc_is_zero(z)) throw std::domain_error("u_jet: the origin is excluded");
  if (n < scheme.n_min()) throw std::domain_error("u_jet: annulus index below n_min");

  Annulus a{scheme.radius(n + 1), scheme.radius(n)};
  ChiJet chi = chi_jet(step, a, z);
  MonomialJet lower = monomial_jet(scheme.log_amplitude(n - 1), scheme.degree(n - 1), z);
  MonomialJet upper = monomial_jet(scheme.log_amplitude(n + 1), scheme.degree(n + 1), z);
  MonomialJet mid = monomial_jet(scheme.log_amplitude(n), scheme.degree(n), z);

  LogComplex chi_v = lc_from_real(chi.value);
  LogComplex om_v = lc_from_real(1.0 - chi.value);
  LogComplex diff = lc_add({lower.value, lc_neg(upper.value)});
  LogComplex diff1 = lc_add({lower.d1, lc_neg(upper.d1)});

  // blend = chi*A + (1-chi)*B with A, B holomorphic; derivatives by the
  // product rule, with every d/dzbar landing on chi.
  ComponentJet blend;
  blend.value = lc_add({lc_mul(chi_v, lower.value), lc_mul(om_v, upper.value)});
  blend.d_z = lc_add({lc_mul(chi.d_z, diff), lc_mul(chi_v, lower.d1), lc_mul(om_v, upper.d1)});
  blend.d_zbar = lc_mul(chi.d_zbar, diff);
  blend.d_zz = lc_add({lc_mul(chi.d_zz, diff), lc_scale(lc_mul(chi.d_z, diff1), 2.0), lc_mul(chi_v, lower.d2),
                       lc_mul(om_v, upper.d2)});
  blend.d_zzbar = lc_add({lc_mul(chi.d_zzbar, diff), lc_mul(chi.d_zbar, diff1)});
  blend.d_zbarzbar = lc_mul(chi.d_zbarzbar, diff);

  ComponentJet mono;
  mono.value = mid.value;
  mono.d_z = mid.d1;
  mono.d_zz = mid.d2;

  UJet jet;
  jet.n = n;
  jet.monomial_first = (n % 2 == 0);
  jet.degree = scheme.degree(n);
  jet.z = z;
  if (jet.monomial_first) {
    jet.u1 = mono;
    jet.u2 = blend;
  } else {
    jet.u1 = blend;
    jet.u2 = mono;
  }
  return jet;
}

UJet u_jet(const Scheme& scheme, const SmoothStep& step, const LogComplex& z) {
  auto n = scheme.annulus_of(z.log_mag);
  if (!n) throw std::domain_error("u_jet: the origin is excluded");
  return u_jet_on(scheme, step, *n, z);
}

double ratio_first_derivatives(const Scheme& scheme, const SmoothStep& step, const LogComplex& z) {
  UJet jet = u_jet(scheme, step, z);
  return 0.5 * (lc_norm_pair(jet.u1.d_zbar, jet.u2.d_zbar) - lc_norm_pair(jet.u1.d_z, jet.u2.d_z));
}

double boundary_consistency(const Scheme& scheme, const SmoothStep& step, int n, int angles) {
  if (n < scheme.n_min() + 1) throw std::domain_error("boundary_consistency: needs annuli n and n-1");
  if (angles < 1) throw std::invalid_argument("boundary_consistency: angles must be >= 1");
  double log_r = std::log(scheme.radius(n));
  double worst = 0.0;
  for (int q = 0; q < angles; ++q) {
    LogComplex z = lc_from_polar_log(log_r, 2.0 * std::numbers::pi * q / angles);
    UJet inner = u_jet_on(scheme, step, n, z);      // circle is the outer edge of A_n
    UJet outer = u_jet_on(scheme, step, n - 1, z);  // and the inner edge of A_{n-1}
    const ComponentJet* lhs[2] = {&inner.u1, &inner.u2};
    const ComponentJet* rhs[2] = {&outer.u1, &outer.u2};
    for (int c = 0; c < 2; ++c) {
      const LogComplex* ea[6] = {&lhs[c]->value, &lhs[c]->d_z,     &lhs[c]->d_zbar,
                                 &lhs[c]->d_zz,  &lhs[c]->d_zzbar, &lhs[c]->d_zbarzbar};
      const LogComplex* eb[6] = {&rhs[c]->value, &rhs[c]->d_z,     &rhs[c]->d_zbar,
                                 &rhs[c]->d_zz,  &rhs[c]->d_zzbar, &rhs[c]->d_zbarzbar};
      for (int e = 0; e < 6; ++e) {
        double rel = relative_difference(*ea[e], *eb[e]);
        if (rel > worst) worst = rel;
      }
    }
  }
  return worst;
}

}  // namespace flatzero
