#pragma once

#include <iosfwd>
#include <string>

namespace fujita::harness {

struct ScanReport {
  std::string summary;    // text table, one line per sigma
  std::string plot_data;  // CSV: p, sigma, classification_code
};

// classification_code: 1 BlowUp, 0 GlobalCandidate, -1 Inconclusive.
// Throws fujita::Error(IoError) on a malformed scan CSV.
ScanReport report(std::istream& scan_csv);
ScanReport report_file(const std::string& path);

}  // namespace fujita::harness
