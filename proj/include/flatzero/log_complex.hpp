#ifndef FLATZERO_LOG_COMPLEX_HPP
#define FLATZERO_LOG_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>

namespace flatzero {

// Complex scalar stored as (log magnitude, phase).  Survives magnitudes far
// outside double range (exp(+-1e6) and beyond), which the amplitude sequences
// F(n) and the monomials z^p(n) require already at moderate n.
//
// Canonical form: phase lies in [-pi, pi); zero is encoded as
// log_mag == -infinity with phase == 0, and no other encoding of zero is valid.
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;
};

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

inline bool lc_is_zero(const LogComplex& a) { return a.log_mag == kLogZero; }

// Fold a phase into [-pi, pi).  remainder() lands in [-pi, pi]; +pi is mapped
// to -pi so equality tests see one representation per direction.
inline double canonical_phase(double p) {
  double r = std::remainder(p, 2.0 * std::numbers::pi);
  if (r >= std::numbers::pi) r -= 2.0 * std::numbers::pi;
  if (r == 0.0) r = 0.0;  // collapse -0
  return r;
}

inline LogComplex lc_zero() { return {}; }
inline LogComplex lc_one() { return {0.0, 0.0}; }

inline LogComplex lc_from_polar_log(double log_mag, double phase) {
  if (log_mag == kLogZero) return {};
  return {log_mag, canonical_phase(phase)};
}

inline LogComplex lc_from_real(double x) {
  if (x == 0.0) return {};
  return {std::log(std::fabs(x)), x > 0.0 ? 0.0 : -std::numbers::pi};
}

inline LogComplex lc_from_complex(std::complex<double> z) {
  double m = std::hypot(z.real(), z.imag());
  if (m == 0.0) return {};
  return {std::log(m), canonical_phase(std::atan2(z.imag(), z.real()))};
}

// (cos, sin) of a canonical phase, exact on the four cardinal directions so
// that sums like 1 + (-1) cancel to exact zero instead of sin(pi) noise.
inline void lc_unit_dir(double phase, double& c, double& s) {
  if (phase == 0.0) {
    c = 1.0;
    s = 0.0;
  } else if (phase == -std::numbers::pi) {
    c = -1.0;
    s = 0.0;
  } else if (phase == 0.5 * std::numbers::pi) {
    c = 0.0;
    s = 1.0;
  } else if (phase == -0.5 * std::numbers::pi) {
    c = 0.0;
    s = -1.0;
  } else {
    c = std::cos(phase);
    s = std::sin(phase);
  }
}

// Conversion to a plain complex.  Throws when the magnitude overflows double
// range; magnitudes below range quietly become 0.
inline std::complex<double> lc_to_complex(const LogComplex& a) {
  if (lc_is_zero(a)) return {0.0, 0.0};
  if (a.log_mag > 709.0) throw std::domain_error("lc_to_complex: magnitude overflows double");
  double m = std::exp(a.log_mag);
  double c, s;
  lc_unit_dir(a.phase, c, s);
  return {m * c, m * s};
}

inline LogComplex lc_mul(const LogComplex& a, const LogComplex& b) {
  if (lc_is_zero(a) || lc_is_zero(b)) return {};
  return {a.log_mag + b.log_mag, canonical_phase(a.phase + b.phase)};
}

inline LogComplex lc_div(const LogComplex& a, const LogComplex& b) {
  if (lc_is_zero(b)) throw std::domain_error("lc_div: division by zero");
  if (lc_is_zero(a)) return {};
  return {a.log_mag - b.log_mag, canonical_phase(a.phase - b.phase)};
}

inline LogComplex lc_conj(const LogComplex& a) {
  if (lc_is_zero(a)) return {};
  return {a.log_mag, canonical_phase(-a.phase)};
}

inline LogComplex lc_neg(const LogComplex& a) {
  if (lc_is_zero(a)) return {};
  return {a.log_mag, canonical_phase(a.phase + std::numbers::pi)};
}

// Multiply by a real scalar (sign handled through the phase).
inline LogComplex lc_scale(const LogComplex& a, double r) { return lc_mul(a, lc_from_real(r)); }

inline LogComplex lc_pow_int(const LogComplex& a, long long k) {
  if (lc_is_zero(a)) {
    if (k > 0) return {};
    if (k == 0) return lc_one();
    throw std::domain_error("lc_pow_int: negative power of zero");
  }
  double kd = static_cast<double>(k);
  return {kd * a.log_mag, canonical_phase(kd * a.phase)};
}

// Sum of a term list.  Factors out the largest log magnitude, accumulates in
// Cartesian in input order, and converts back.  Accurate to ~count*eps
// relative whenever the sum is not annihilated by cancellation; a Cartesian
// accumulation of exactly (0, 0) yields the canonical zero.
inline LogComplex lc_add(std::span<const LogComplex> terms) {
  if (terms.empty()) throw std::invalid_argument("lc_add: empty term list");
  double m = kLogZero;
  for (const auto& t : terms)
    if (t.log_mag > m) m = t.log_mag;
  if (m == kLogZero) return {};
  double x = 0.0, y = 0.0;
  for (const auto& t : terms) {
    if (lc_is_zero(t)) continue;
    double w = std::exp(t.log_mag - m);
    double c, s;
    lc_unit_dir(t.phase, c, s);
    x += w * c;
    y += w * s;
  }
  double r = std::hypot(x, y);
  if (r == 0.0) return {};
  return {m + std::log(r), canonical_phase(std::atan2(y, x))};
}

inline LogComplex lc_add(std::initializer_list<LogComplex> terms) {
  return lc_add(std::span<const LogComplex>(terms.begin(), terms.size()));
}

// log(|a|^2 + |b|^2); -infinity only when both inputs are zero.
inline double lc_norm_pair(const LogComplex& a, const LogComplex& b) {
  double la = 2.0 * a.log_mag;
  double lb = 2.0 * b.log_mag;
  double m = la > lb ? la : lb;
  if (m == kLogZero) return kLogZero;
  double s = 0.0;
  if (la != kLogZero) s += std::exp(la - m);
  if (lb != kLogZero) s += std::exp(lb - m);
  return m + std::log(s);
}

// |a - b| / max(|a|, |b|), evaluated in the log domain; 0 when both are zero.
inline double relative_difference(const LogComplex& a, const LogComplex& b) {
  if (lc_is_zero(a) && lc_is_zero(b)) return 0.0;
  LogComplex d = lc_add({a, lc_neg(b)});
  if (lc_is_zero(d)) return 0.0;
  double m = a.log_mag > b.log_mag ? a.log_mag : b.log_mag;
  return std::exp(d.log_mag - m);
}

}  // namespace flatzero

#endif
