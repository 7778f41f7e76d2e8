#ifndef FLATZERO_BELTRAMI_HPP
#define FLATZERO_BELTRAMI_HPP

#include "flatzero/log_complex.hpp"
#include "flatzero/map_jet.hpp"

namespace flatzero {

// The coefficient matrix of the first-order system u_zbar = Q(z) u_z, with
// q_ij = u^i_zbar conj(u^j_z) / ||u_z||^2.  The monomial component is
// holomorphic, so one full row is exactly zero (the first row on even annuli,
// the second on odd ones).  Q(0) is the zero matrix by definition; numeric
// evaluation never produces it.
struct QMatrix {
  LogComplex q11, q12, q21, q22;
  double log_frobenius_sq = kLogZero;  // log(sum |q_ij|^2) = log(||u_zbar||^2/||u_z||^2)
};

QMatrix q_matrix(const UJet& jet);

// d/dzbar of the blend-row diagonal entry of Q (q22 on even annuli, q11 on
// odd ones), split into the three displayed terms:
//   total = term1 + term2 - term3
//   term1 = b_zbzb conj(b_z) / N
//   term2 = b_zb |m_z|^2 conj(b_zz - (p-1) b_z / z) / N^2
//   term3 = b_zb conj(b_z)^2 b_zzb / N^2
// where b is the blend component, m the monomial, p its degree and
// N = ||u_z||^2.  The inner subtraction is a single accumulated sum so the
// near-cancellation of the degree^2-scale pieces is not lost to rounding.
struct Q22Derivative {
  LogComplex total, term1, term2, term3;
  int entry = 2;  // which diagonal entry: 2 on even annuli, 1 on odd
};

Q22Derivative dq22_dzbar(const UJet& jet);

// Log magnitudes of the three terms at the real midline point
// x_n = radius(n+1) + delta_r(n)/2.  loglog scheme, even n only.
struct TermDominance {
  int n = 0;
  double t1 = kLogZero, t2 = kLogZero, t3 = kLogZero;
};

TermDominance term_dominance(const Scheme& scheme, const SmoothStep& step, int n_even);

// Max over rows of |u^i_zbar - (q_i1 u^1_z + q_i2 u^2_z)| relative to
// ||u_zbar||.  The system is an identity by construction, so this measures
// accumulated rounding only.
double residual_identity(const UJet& jet, const QMatrix& q);

}  // namespace flatzero

#endif
