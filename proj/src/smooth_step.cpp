#include "flatzero/smooth_step.hpp"

#include <cmath>
#include <stdexcept>

#include "flatzero/finite_diff.hpp"

namespace flatzero {

namespace {

// The standard bump: psi(u) = exp(1 - 1/(1-u^2)) on |u| < 1, zero elsewhere.
// psi(0) = 1 exactly.  Near |u| = 1 the exponent diverges and exp underflows
// cleanly to 0.
double psi(double u) {
  if (std::fabs(u) >= 1.0) return 0.0;
  double t = (1.0 - u) * (1.0 + u);
  return std::exp(1.0 - 1.0 / t);
}

double psi_prime(double u) {
  if (std::fabs(u) >= 1.0) return 0.0;
  double t = (1.0 - u) * (1.0 + u);
  return psi(u) * (-2.0 * u) / (t * t);
}

template <typename F>
double simpson(F f, double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson_rec(F f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                            int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, m, fa, flm, fm);
  double right = simpson(f, m, b, fm, frm, fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(F f, double a, double b, double tol) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = simpson(f, a, b, fa, fm, fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 40);
}

constexpr int kCacheIntervals = 4096;
constexpr double kSupportLo = 0.25;
constexpr double kSupportHi = 0.75;

}  // namespace

double SmoothStep::density(double x) const {
  double core = geo_.core_coeff * psi((x - 0.5) / geo_.core_halfwidth);
  double lo = psi((x - geo_.side_center) / geo_.side_halfwidth);
  double hi = psi((x - (1.0 - geo_.side_center)) / geo_.side_halfwidth);
  return core + lambda_ * (lo + hi);
}

double SmoothStep::density_prime(double x) const {
  double core = geo_.core_coeff * psi_prime((x - 0.5) / geo_.core_halfwidth) / geo_.core_halfwidth;
  double lo = psi_prime((x - geo_.side_center) / geo_.side_halfwidth);
  double hi = psi_prime((x - (1.0 - geo_.side_center)) / geo_.side_halfwidth);
  return core + lambda_ * (lo + hi) / geo_.side_halfwidth;
}

double SmoothStep::value(double x) const {
  if (x <= kSupportLo) return 0.0;
  if (x >= kSupportHi) return 1.0;
  double h = (kSupportHi - kSupportLo) / kCacheIntervals;
  int i = static_cast<int>((x - kSupportLo) / h);
  if (i < 0) i = 0;
  if (i >= kCacheIntervals) i = kCacheIntervals - 1;
  double x0 = kSupportLo + i * h;
  auto g = [this](double t) { return density(t); };
  return (cum_[i] + adaptive_simpson(g, x0, x, quadrature_tol_ / kCacheIntervals)) / total_;
}

double SmoothStep::eval(double x, int order) const {
  switch (order) {
    case 0: return value(x);
    case 1: return density(x);
    case 2: return density_prime(x);
    default: throw std::invalid_argument("SmoothStep::eval: order must be 0, 1 or 2");
  }
}

double SmoothStep::eval_fd(double x, int order, double h) const {
  if (h <= 0.0) throw std::invalid_argument("SmoothStep::eval_fd: step must be positive");
  auto spp = [this](double t) { return density_prime(t); };
  switch (order) {
    case 3: return fd_derivative(spp, x, h, 1);
    case 4: return fd_second_derivative(spp, x, h, 1);
    default: throw std::invalid_argument("SmoothStep::eval_fd: order must be 3 or 4");
  }
}

SmoothStep build_step(const StepGeometry& geo, double quadrature_tol) {
  if (!(quadrature_tol > 0.0) || quadrature_tol > 1e-6)
    throw std::invalid_argument("build_step: quadrature_tol must lie in (0, 1e-6]");
  if (!(geo.core_halfwidth > 0.0) || geo.core_halfwidth >= 0.25)
    throw std::invalid_argument("build_step: core support must lie inside (1/4, 3/4)");
  if (!(geo.side_halfwidth > 0.0) || geo.side_center - geo.side_halfwidth < kSupportLo ||
      geo.side_center + geo.side_halfwidth >= 0.5)
    throw std::invalid_argument("build_step: side supports must lie inside [1/4, 1/2)");
  if (!(geo.core_coeff > 0.0)) throw std::invalid_argument("build_step: core_coeff must be positive");

  SmoothStep s;
  s.geo_ = geo;
  s.quadrature_tol_ = quadrature_tol;

  double int_psi = adaptive_simpson(psi, -1.0, 1.0, 0.01 * quadrature_tol);
  double core_mass = geo.core_coeff * geo.core_halfwidth * int_psi;
  double side_mass = 2.0 * geo.side_halfwidth * int_psi;
  s.lambda_ = (1.0 - core_mass) / side_mass;
  if (s.lambda_ < 0.0) throw std::invalid_argument("build_step: core mass exceeds 1");

  s.cum_.assign(kCacheIntervals + 1, 0.0);
  double h = (kSupportHi - kSupportLo) / kCacheIntervals;
  auto g = [&s](double t) { return s.density(t); };
  for (int i = 0; i < kCacheIntervals; ++i) {
    double a = kSupportLo + i * h;
    s.cum_[i + 1] = s.cum_[i] + adaptive_simpson(g, a, a + h, quadrature_tol / kCacheIntervals);
  }
  s.total_ = s.cum_[kCacheIntervals];
  return s;
}

SmoothStep build_step(double quadrature_tol) { return build_step(StepGeometry{}, quadrature_tol); }

}  // namespace flatzero
