#include "flatzero/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <numbers>
#include <sstream>

#include "flatzero/beltrami.hpp"
#include "flatzero/map_jet.hpp"

namespace flatzero {

std::vector<ScanRow> scan_grid(const Scheme& scheme, const SmoothStep& step, int n_lo, int n_hi, int angles) {
  if (n_lo < scheme.n_min() || n_hi < n_lo) throw std::invalid_argument("scan_grid: invalid n range");
  if (angles < 1) throw std::invalid_argument("scan_grid: angles must be >= 1");
  static constexpr double kFractions[3] = {0.25, 0.5, 0.75};

  std::vector<ScanRow> rows;
  rows.reserve(std::size_t(n_hi - n_lo + 1) * 3 * angles);
  for (int n = n_lo; n <= n_hi; ++n) {
    for (double f : kFractions) {
      double r = scheme.radius(n + 1) + f * scheme.delta_r(n);
      double lr = std::log(r);
      for (int a = 0; a < angles; ++a) {
        LogComplex z = lc_from_polar_log(lr, 2.0 * std::numbers::pi * a / angles);
        UJet jet = u_jet_on(scheme, step, n, z);
        QMatrix q = q_matrix(jet);
        Q22Derivative d = dq22_dzbar(jet);
        ScanRow row;
        row.n = n;
        row.radius_fraction = f;
        row.angle = z.phase;
        row.log_ratio = 0.5 * (lc_norm_pair(jet.u1.d_zbar, jet.u2.d_zbar) - lc_norm_pair(jet.u1.d_z, jet.u2.d_z));
        row.log_q11 = q.q11.log_mag;
        row.log_q12 = q.q12.log_mag;
        row.log_q21 = q.q21.log_mag;
        row.log_q22 = q.q22.log_mag;
        row.log_dq22 = d.total.log_mag;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "n,radius_fraction,angle,log_ratio,log_q11,log_q12,log_q21,log_q22,log_dq22\n";
  for (const ScanRow& r : rows) {
    out << r.n << ',' << format_double(r.radius_fraction) << ',' << format_double(r.angle) << ','
        << format_double(r.log_ratio) << ',' << format_double(r.log_q11) << ',' << format_double(r.log_q12) << ','
        << format_double(r.log_q21) << ',' << format_double(r.log_q22) << ',' << format_double(r.log_dq22) << '\n';
  }
}

int CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (header) {
      table.columns = cells;
      header = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(std::strtod(c.c_str(), nullptr));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace flatzero
