#ifndef FLATZERO_SVG_HPP
#define FLATZERO_SVG_HPP

#include <ostream>
#include <string>

#include "flatzero/csv.hpp"

namespace flatzero {

struct ChartSpec {
  std::string x_column;
  std::string y_column;
  bool log_scale_y = false;  // plot log10(y); non-positive samples are skipped
};

// Single-panel SVG 1.1 line chart of y vs x.  When the table carries a
// radius_fraction column distinct from both axes, one polyline is drawn per
// fraction value.  Throws invalid_argument on a missing column or when no
// finite sample survives.
void write_chart_svg(std::ostream& out, const CsvTable& table, const ChartSpec& spec);

}  // namespace flatzero

#endif
