#include "flatzero/beltrami.hpp"

#include <cmath>
#include <stdexcept>

namespace flatzero {

namespace {

// log of sum of |entry|^2 over the four matrix entries.
double log_frobenius(const LogComplex& a, const LogComplex& b, const LogComplex& c, const LogComplex& d) {
  double l[4] = {2.0 * a.log_mag, 2.0 * b.log_mag, 2.0 * c.log_mag, 2.0 * d.log_mag};
  double m = kLogZero;
  for (double v : l)
    if (v > m) m = v;
  if (m == kLogZero) return kLogZero;
  double s = 0.0;
  for (double v : l)
    if (v != kLogZero) s += std::exp(v - m);
  return m + std::log(s);
}

LogComplex shift(LogComplex v, double log_shift) {
  if (!lc_is_zero(v)) v.log_mag -= log_shift;
  return v;
}

}  // namespace

QMatrix q_matrix(const UJet& jet) {
  double log_norm = lc_norm_pair(jet.u1.d_z, jet.u2.d_z);
  auto entry = [&](const ComponentJet& row, const ComponentJet& col) {
    return shift(lc_mul(row.d_zbar, lc_conj(col.d_z)), log_norm);
  };
  QMatrix q;
  q.q11 = entry(jet.u1, jet.u1);
  q.q12 = entry(jet.u1, jet.u2);
  q.q21 = entry(jet.u2, jet.u1);
  q.q22 = entry(jet.u2, jet.u2);
  q.log_frobenius_sq = log_frobenius(q.q11, q.q12, q.q21, q.q22);
  return q;
}

Q22Derivative dq22_dzbar(const UJet& jet) {
  const ComponentJet& b = jet.blend();
  const ComponentJet& m = jet.monomial();
  double log_norm = lc_norm_pair(jet.u1.d_z, jet.u2.d_z);

  Q22Derivative d;
  d.entry = jet.monomial_first ? 2 : 1;
  d.term1 = shift(lc_mul(b.d_zbarzbar, lc_conj(b.d_z)), log_norm);

  // b_zz - (p-1) b_z / z accumulated before any multiplication: the two
  // pieces agree to their leading degree^2-order and only the difference is
  // meaningful.
  LogComplex reduced = lc_add({b.d_zz, lc_neg(lc_div(lc_scale(b.d_z, double(jet.degree - 1)), jet.z))});
  LogComplex mono_sq = lc_mul(m.d_z, lc_conj(m.d_z));
  d.term2 = shift(lc_mul(b.d_zbar, lc_mul(mono_sq, lc_conj(reduced))), 2.0 * log_norm);

  LogComplex conj_bz = lc_conj(b.d_z);
  d.term3 = shift(lc_mul(lc_mul(b.d_zbar, conj_bz), lc_mul(b.d_zzbar, conj_bz)), 2.0 * log_norm);

  d.total = lc_add({d.term1, d.term2, lc_neg(d.term3)});
  return d;
}

double residual_identity(const UJet& jet, const QMatrix& q) {
  double log_zbar_norm = 0.5 * lc_norm_pair(jet.u1.d_zbar, jet.u2.d_zbar);
  if (log_zbar_norm == kLogZero) return 0.0;  // both rows identically zero on flat collars
  const LogComplex* rows[2][3] = {{&jet.u1.d_zbar, &q.q11, &q.q12}, {&jet.u2.d_zbar, &q.q21, &q.q22}};
  double worst = 0.0;
  for (auto& row : rows) {
    LogComplex residual =
        lc_add({*row[0], lc_neg(lc_mul(*row[1], jet.u1.d_z)), lc_neg(lc_mul(*row[2], jet.u2.d_z))});
    if (lc_is_zero(residual)) continue;
    worst = std::max(worst, std::exp(residual.log_mag - log_zbar_norm));
  }
  return worst;
}

TermDominance term_dominance(const Scheme& scheme, const SmoothStep& step, int n_even) {
  if (scheme.kind() != SchemeKind::loglog)
    throw std::domain_error("term_dominance: defined for the loglog scheme only");
  if (n_even < scheme.n_min() || n_even % 2 != 0) throw std::domain_error("term_dominance: n must be even");
  double x = scheme.radius(n_even + 1) + 0.5 * scheme.delta_r(n_even);
  UJet jet = u_jet_on(scheme, step, n_even, lc_from_polar_log(std::log(x), 0.0));
  Q22Derivative d = dq22_dzbar(jet);
  return {n_even, d.term1.log_mag, d.term2.log_mag, d.term3.log_mag};
}

}  // namespace flatzero
