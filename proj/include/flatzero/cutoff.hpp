#ifndef FLATZERO_CUTOFF_HPP
#define FLATZERO_CUTOFF_HPP

#include "flatzero/log_complex.hpp"
#include "flatzero/smooth_step.hpp"

namespace flatzero {

// Closed annulus r_inner <= |z| <= r_outer.
struct Annulus {
  double r_inner = 0.0;
  double r_outer = 0.0;
  double delta_r() const { return r_outer - r_inner; }
};

// Wirtinger jet of the radial cutoff chi(z) = s((|z| - r_inner) / delta_r)
// through total order 2.  chi is real-valued, so d_zbar = conj(d_z),
// d_zbarzbar = conj(d_zz), and d_zzbar is real.
struct ChiJet {
  double value = 0.0;
  LogComplex d_z, d_zbar, d_zz, d_zzbar, d_zbarzbar;
};

// Evaluate the cutoff jet at z given as (log|z|, arg z).  |z| must lie in
// [r_inner, r_outer]; the boundary circles are allowed and return the flat
// plateau values.
ChiJet chi_jet(const SmoothStep& step, const Annulus& a, const LogComplex& z);

// Empirical constant sup over a radial x angular sample grid of
// |d^i_z d^j_zbar chi| * |z|^(2k) * delta_r^k with k = i + j <= 2.
double chi_bound_estimate(const SmoothStep& step, const Annulus& a, int dz_order, int dzbar_order, int samples);

}  // namespace flatzero

#endif
