#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fujita/harness/config.hpp"

namespace fujita::harness {

struct ScanRow {
  double p = 0.0;
  double sigma = 0.0;
  double d = 0.0;
  double alpha = 0.0;
  int N = 1;
  double p_c = 0.0;
  double p_F_sigma = 0.0;
  double ell = 0.0;
  std::string classification;
  double t_est_or_horizon = 0.0;
  double final_sup = 0.0;
  double final_weak_pc_norm = 0.0;
  double wallclock_s = 0.0;
};

const std::vector<std::string>& scan_columns();

// One solver run for the pair (p, sigma). Failures become an Inconclusive row.
ScanRow run_scan_row(const ExperimentConfig& config, double p, double sigma);

// Rows for every (p, sigma) pair sorted by (sigma, p); up to `jobs` rows run
// concurrently (0 means FUJITA_THREADS, else the hardware concurrency).
std::vector<ScanRow> scan(const ExperimentConfig& config, unsigned jobs = 0);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

unsigned default_jobs();

}  // namespace fujita::harness
