#include "fujita/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fujita/error.hpp"
#include "fujita/harness/csv.hpp"
#include "fujita/harness/scan.hpp"

namespace fujita::harness {
namespace {

struct Entry {
  double p;
  double p_F;
  int code;
};

int classification_code(const std::string& c) {
  if (c == "BlowUp") return 1;
  if (c == "GlobalCandidate") return 0;
  return -1;
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

ScanReport report(std::istream& in) {
  const auto table = read_csv(in);
  const auto& cols = scan_columns();
  ScanReport out;
  std::ostringstream plot;
  write_csv_row(plot, {"p", "sigma", "classification_code"});

  if (table.empty()) {
    out.summary = "no rows\n";
    out.plot_data = plot.str();
    return out;
  }
  if (table.front() != cols) throw Error(ErrorCode::IoError, "scan CSV header does not match the scan columns");

  std::map<double, std::vector<Entry>> by_sigma;
  const std::size_t i_p = 0, i_sigma = 1, i_pf = 6, i_class = 8;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const auto& row = table[r];
    if (row.size() != cols.size()) {
      throw Error(ErrorCode::IoError, "row " + std::to_string(r) + " has " + std::to_string(row.size()) + " fields");
    }
    const double p = parse_number(row[i_p]);
    const double sigma = parse_number(row[i_sigma]);
    const int code = classification_code(row[i_class]);
    by_sigma[sigma].push_back({p, parse_number(row[i_pf]), code});
    write_csv_row(plot, {row[i_p], row[i_sigma], std::to_string(code)});
  }
  out.plot_data = plot.str();
  if (by_sigma.empty()) {
    out.summary = "no rows\n";
    return out;
  }

  std::ostringstream s;
  s << "sigma  p_F(sigma)  rows  blow-up  global  inconclusive  empirical boundary  contains p_F\n";
  for (auto& [sigma, entries] : by_sigma) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.p < b.p; });
    int nb = 0, ng = 0, ni = 0;
    double lo = -INFINITY, hi = INFINITY;
    for (const Entry& e : entries) {
      if (e.code == 1) { ++nb; lo = std::max(lo, e.p); }
      else if (e.code == 0) { ++ng; hi = std::min(hi, e.p); }
      else ++ni;
    }
    const double pF = entries.front().p_F;
    std::string bracket, contains;
    if (nb == 0 && ng == 0) {
      bracket = "none";
      contains = "n/a";
    } else if (lo > hi) {
      bracket = "non-monotone";
      contains = "no";
    } else {
      bracket = "[" + (nb ? fmt(lo) : std::string("1")) + ", " + (ng ? fmt(hi) : std::string("inf")) + "]";
      const double a = nb ? lo : 1.0;
      contains = (pF >= a && pF <= hi) ? "yes" : "no";
    }
    s << fmt(sigma) << "  " << fmt(pF) << "  " << entries.size() << "  " << nb << "  " << ng << "  " << ni << "  "
      << bracket << "  " << contains << "\n";
  }
  out.summary = s.str();
  return out;
}

ScanReport report_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return report(in);
}

}  // namespace fujita::harness
