#ifndef FLATZERO_VERIFY_HPP
#define FLATZERO_VERIFY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatzero/scheme.hpp"
#include "flatzero/smooth_step.hpp"

#include "json.hpp"

namespace flatzero {

// Configuration shared by all suites of one run.  Sample grids derive from it
// deterministically: identical configs give bit-identical reports.
struct SuiteConfig {
  SchemeKind kind = SchemeKind::loglog;
  int n_lo = 4;
  int n_hi = 200;
  int angle_samples = 17;  // odd counts avoid aliasing the frequency-4n blend interference
  int k_max = 5;
  bool fd_enabled = true;
  double quadrature_tol = 1e-12;
  std::vector<std::pair<std::string, double>> tolerances;

  double tolerance(std::string_view name) const;
  void set_tolerance(std::string_view name, double value);

  static SuiteConfig defaults(SchemeKind kind);
};

struct SuiteRecord {
  std::string name;
  bool verdict = false;
  std::vector<std::pair<std::string, double>> constants;  // measured, reported, never asserted against the source
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_constant(std::string name, double value) { constants.emplace_back(std::move(name), value); }
};

struct VerificationReport {
  SchemeKind kind = SchemeKind::loglog;
  SuiteConfig config;
  std::vector<SuiteRecord> suites;

  bool all_pass() const;
};

// Individual suites.  Preconditions on the scheme kind throw domain_error.
SuiteRecord suite_ratio_rosay(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);
SuiteRecord suite_ratio_loglog(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);
SuiteRecord suite_ratio(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);
SuiteRecord suite_flatness(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);
SuiteRecord suite_smoothness_criterion(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);
SuiteRecord suite_q22_growth(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);
SuiteRecord suite_fd_oracle(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);
SuiteRecord suite_calculus_lemma(const Scheme& scheme, const SmoothStep& step, const SuiteConfig& cfg);

bool is_known_suite(std::string_view name);
std::vector<std::string> default_suites(SchemeKind kind);

// Run the named suites in order. Unknown names and kind mismatches throw.
VerificationReport run_suites(const SuiteConfig& cfg, const std::vector<std::string>& names);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace flatzero

#endif
