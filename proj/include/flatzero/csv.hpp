#ifndef FLATZERO_CSV_HPP
#define FLATZERO_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

#include "flatzero/scheme.hpp"
#include "flatzero/smooth_step.hpp"

namespace flatzero {

// One sample of the annular scan grid.  Column order is fixed; log columns
// are natural-log magnitudes and may be -inf on flat collars.
struct ScanRow {
  int n = 0;
  double radius_fraction = 0.0;
  double angle = 0.0;
  double log_ratio = 0.0;
  double log_q11 = 0.0, log_q12 = 0.0, log_q21 = 0.0, log_q22 = 0.0;
  double log_dq22 = 0.0;
};

std::vector<ScanRow> scan_grid(const Scheme& scheme, const SmoothStep& step, int n_lo, int n_hi, int angles);

// UTF-8, comma-separated, '.' decimal point, LF line endings, deterministic.
void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

// Generic numeric table as read back from a CSV file.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int column_index(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(std::istream& in);

}  // namespace flatzero

#endif
