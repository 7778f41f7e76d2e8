#ifndef FLATZERO_SCHEME_HPP
#define FLATZERO_SCHEME_HPP

#include <mutex>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace flatzero {

// The two built-in sequence schemes.
//   rosay:  radii 2^(1-n), degrees p(n) = n,  amplitudes log F(n) = n^2/2 * ln 2.
//   loglog: radii 1/ln(n+1), degrees p(n) = n^2, amplitudes by the recursion
//           log F(n) = log F(n-1) + (2n-2) ln ln(n+2), F(1) = 1.
enum class SchemeKind { rosay, loglog };

const char* to_string(SchemeKind kind);
std::optional<SchemeKind> scheme_kind_from_string(std::string_view name);

class Scheme {
 public:
  explicit Scheme(SchemeKind kind) : kind_(kind) {}
  Scheme(const Scheme& other) : kind_(other.kind_) {}
  Scheme& operator=(const Scheme&) = delete;

  SchemeKind kind() const { return kind_; }
  int n_min() const { return 1; }

  double radius(int n) const;      // n >= n_min
  double log_radius(int n) const;  // log(radius(n)), the comparison key for annulus lookup
  double delta_r(int n) const;     // radius(n) - radius(n+1) > 0

  // Degree and log amplitude extend to n = 0 (p(0) = 0, F(0) = 1), which the
  // map evaluation needs on the outermost annulus.
  long long degree(int n) const;
  double log_amplitude(int n) const;

  // The amplitude-recursion balance factor g(n); reporting only.
  double fudge(int n) const;

  // Index n of the annulus radius(n+1) <= |z| <= radius(n), from log|z|.
  // A point exactly on a shared circle radius(m) belongs to annulus m-1 (the
  // annulus whose inner edge it is), clamped to n_min for the outer circle.
  // Returns nullopt for the origin; throws for |z| > radius(n_min).
  std::optional<int> annulus_of(double log_abs_z) const;

  // Natural log of F(n+1) p(n+1)^k radius(n)^(p(n+1)-4k) / (delta_r/r)^k.
  // Requires p(n+1) > 4k.
  double smoothness_criterion(int n, int k) const;

  // (delta_r(n)/radius(n)) / (delta_r(n+2)/radius(n+2)).
  double hypothesis_ratio(int n) const;

  // loglog only: {(delta_r/r) * n * ln(n+2), delta_r/r}.  The normalized
  // value tends to 1.
  std::pair<double, double> normalized_gap(int n) const;

  // Fill the amplitude cache up to n_max so later reads race-free trivially.
  void prepopulate(int n_max) const;

 private:
  SchemeKind kind_;
  mutable std::mutex mu_;
  mutable std::vector<double> log_f_;  // loglog cache, index n
};

}  // namespace flatzero

#endif
