#ifndef FLATZERO_MAP_JET_HPP
#define FLATZERO_MAP_JET_HPP

#include "flatzero/log_complex.hpp"
#include "flatzero/scheme.hpp"
#include "flatzero/smooth_step.hpp"

namespace flatzero {

// All Wirtinger partials of one component of u through total order 2.
struct ComponentJet {
  LogComplex value, d_z, d_zbar, d_zz, d_zzbar, d_zbarzbar;
};

// Order-2 jet of u = (u1, u2) at one point.  On annulus n one component is
// the pure monomial F(n) z^p(n) (u1 for even n, u2 for odd n) and the other
// is the cutoff blend chi F(n-1) z^p(n-1) + (1 - chi) F(n+1) z^p(n+1).
struct UJet {
  int n = 0;
  bool monomial_first = true;  // parity convention: true iff n is even
  long long degree = 0;        // p(n) of the monomial component
  LogComplex z;                // evaluation point as (log|z|, arg z)
  ComponentJet u1, u2;

  const ComponentJet& monomial() const { return monomial_first ? u1 : u2; }
  const ComponentJet& blend() const { return monomial_first ? u2 : u1; }
};

// Jet with the annulus index resolved from |z|.  z = 0 is a domain error.
UJet u_jet(const Scheme& scheme, const SmoothStep& step, const LogComplex& z);

// Jet with a pinned annulus index (shared circles can be evaluated from
// either side; finite-difference probes stay on one annulus).
UJet u_jet_on(const Scheme& scheme, const SmoothStep& step, int n, const LogComplex& z);

// log(||u_zbar|| / ||u_z||).  The denominator is positive for every z != 0,
// so the value is finite or -infinity (on flat collars).
double ratio_first_derivatives(const Scheme& scheme, const SmoothStep& step, const LogComplex& z);

// Max relative discrepancy, over sampled angles, components and jet entries,
// between the jets computed with annulus assignment n and n-1 on the shared
// circle |z| = radius(n).  Requires n >= n_min + 1.
double boundary_consistency(const Scheme& scheme, const SmoothStep& step, int n, int angles);

}  // namespace flatzero

#endif
