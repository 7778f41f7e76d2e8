#include "flatzero/scheme.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace flatzero {

namespace {
constexpr int kMaxAnnulus = 1 << 26;
}

const char* to_string(SchemeKind kind) { return kind == SchemeKind::rosay ? "rosay" : "loglog"; }

std::optional<SchemeKind> scheme_kind_from_string(std::string_view name) {
  if (name == "rosay") return SchemeKind::rosay;
  if (name == "loglog") return SchemeKind::loglog;
  return std::nullopt;
}

double Scheme::radius(int n) const {
  if (n < n_min()) throw std::domain_error("Scheme::radius: n below n_min");
  return kind_ == SchemeKind::rosay ? std::exp2(1.0 - n) : 1.0 / std::log(n + 1.0);
}

double Scheme::log_radius(int n) const {
  double r = radius(n);
  if (!(r > 0.0)) throw std::domain_error("Scheme::log_radius: radius underflows double range at this n");
  return std::log(r);
}

double Scheme::delta_r(int n) const { return radius(n) - radius(n + 1); }

long long Scheme::degree(int n) const {
  if (n < 0) throw std::domain_error("Scheme::degree: n must be >= 0");
  return kind_ == SchemeKind::rosay ? n : static_cast<long long>(n) * n;
}

double Scheme::log_amplitude(int n) const {
  if (n < 0) throw std::domain_error("Scheme::log_amplitude: n must be >= 0");
  if (kind_ == SchemeKind::rosay) return 0.5 * double(n) * double(n) * std::numbers::ln2;
  std::lock_guard<std::mutex> lock(mu_);
  if (log_f_.empty()) log_f_ = {0.0, 0.0};  // F(0) = F(1) = 1
  while (static_cast<int>(log_f_.size()) <= n) {
    int m = static_cast<int>(log_f_.size());
    log_f_.push_back(log_f_.back() + (2.0 * m - 2.0) * std::log(std::log(m + 2.0)));
  }
  return log_f_[n];
}

double Scheme::fudge(int n) const {
  if (n < n_min()) throw std::domain_error("Scheme::fudge: n below n_min");
  return kind_ == SchemeKind::rosay ? std::sqrt(2.0) : std::log(n + 2.0);
}

void Scheme::prepopulate(int n_max) const {
  if (kind_ == SchemeKind::loglog) (void)log_amplitude(n_max);
}

std::optional<int> Scheme::annulus_of(double log_abs_z) const {
  if (log_abs_z == -std::numeric_limits<double>::infinity()) return std::nullopt;
  if (std::isnan(log_abs_z)) throw std::domain_error("Scheme::annulus_of: invalid log|z|");
  if (log_abs_z > log_radius(n_min())) throw std::domain_error("Scheme::annulus_of: |z| exceeds the outer radius");
  // Smallest n with log_radius(n+1) <= log|z|; gallop then bisect.
  int lo = n_min(), hi = n_min();
  while (log_radius(hi + 1) > log_abs_z) {
    lo = hi + 1;
    if (hi > kMaxAnnulus) throw std::domain_error("Scheme::annulus_of: |z| below the supported annulus range");
    hi *= 2;
  }
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (log_radius(mid + 1) > log_abs_z)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

double Scheme::smoothness_criterion(int n, int k) const {
  if (n < n_min()) throw std::domain_error("Scheme::smoothness_criterion: n below n_min");
  if (k < 0) throw std::domain_error("Scheme::smoothness_criterion: k must be >= 0");
  long long p1 = degree(n + 1);
  if (p1 <= 4ll * k) throw std::domain_error("Scheme::smoothness_criterion: requires p(n+1) > 4k");
  double log_r = log_radius(n);
  return log_amplitude(n + 1) + k * std::log(double(p1)) + double(p1 - 4ll * k) * log_r -
         k * std::log(delta_r(n) / radius(n));
}

double Scheme::hypothesis_ratio(int n) const {
  if (n < n_min()) throw std::domain_error("Scheme::hypothesis_ratio: n below n_min");
  return (delta_r(n) / radius(n)) / (delta_r(n + 2) / radius(n + 2));
}

std::pair<double, double> Scheme::normalized_gap(int n) const {
  if (kind_ != SchemeKind::loglog) throw std::domain_error("Scheme::normalized_gap: defined for the loglog scheme only");
  if (n < n_min()) throw std::domain_error("Scheme::normalized_gap: n below n_min");
  double gap = delta_r(n) / radius(n);
  return {gap * n * std::log(n + 2.0), gap};
}

}  // namespace flatzero
