#ifndef FLATZERO_SMOOTH_STEP_HPP
#define FLATZERO_SMOOTH_STEP_HPP

#include <utility>
#include <vector>

namespace flatzero {

// Geometry of the step density g = s'.  Three bump functions: a core bump
// centered at 1/2 (even about 1/2, so s''(1/2) = 0 comes for free) and two
// side bumps symmetric about 1/2 whose common coefficient is solved so that
// the total mass is exactly 1.  All supports live inside [1/4, 3/4], which
// makes the plateaus s = 0 on [0, 1/4] and s = 1 on [3/4, 1] exact.
struct StepGeometry {
  double core_halfwidth = 0.06;
  double side_center = 0.36;  // lower center; the upper one is 1 - side_center
  double side_halfwidth = 0.11;
  double core_coeff = 2.0;    // forces s'(1/2) = 2
};

// A smooth step: s = 0 on [0, 1/4], s = 1 on [3/4, 1], nondecreasing,
// with s(1/2) = 1/2, s'(1/2) = 2 and s''(1/2) = 0.  The value is a cached
// cumulative integral of the closed-form density; the first and second
// derivatives are evaluated in closed form.
class SmoothStep {
 public:
  double value(double x) const;          // s(x)
  double density(double x) const;        // s'(x)
  double density_prime(double x) const;  // s''(x)

  // order 0, 1 or 2.
  double eval(double x, int order) const;

  // order 3 or 4 by central differences of the closed-form s'' with one
  // Richardson extrapolation level; accuracy O(h^4) in exact arithmetic.
  double eval_fd(double x, int order, double h) const;

  double core_center() const { return 0.5; }
  const StepGeometry& geometry() const { return geo_; }
  std::pair<double, double> side_centers() const { return {geo_.side_center, 1.0 - geo_.side_center}; }
  double side_coeff() const { return lambda_; }
  double quadrature_tol() const { return quadrature_tol_; }
  double total_mass() const { return total_; }  // cached integral of the density

 private:
  friend SmoothStep build_step(const StepGeometry&, double);

  StepGeometry geo_;
  double lambda_ = 0.0;
  double quadrature_tol_ = 0.0;
  double total_ = 1.0;
  std::vector<double> cum_;  // cumulative integral of g over [1/4, 3/4]
};

SmoothStep build_step(const StepGeometry& geo, double quadrature_tol);
SmoothStep build_step(double quadrature_tol);

}  // namespace flatzero

#endif
