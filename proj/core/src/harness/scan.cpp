#include "fujita/harness/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "fujita/exponents.hpp"
#include "fujita/harness/csv.hpp"
#include "fujita/norms.hpp"
#include "fujita/run.hpp"

namespace fujita::harness {

const std::vector<std::string>& scan_columns() {
  static const std::vector<std::string> cols{"p",     "sigma",          "d",         "alpha",
                                             "N",     "p_c",            "p_F_sigma", "ell",
                                             "classification", "t_est_or_horizon", "final_sup",
                                             "final_weak_pc_norm", "wallclock_s"};
  return cols;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("FUJITA_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ScanRow run_scan_row(const ExperimentConfig& config, double p, double sigma) {
  const auto start = std::chrono::steady_clock::now();
  ScanRow row;
  row.p = p;
  row.sigma = sigma;
  row.d = config.d;
  row.alpha = config.alpha;
  row.N = config.dim;
  row.final_sup = std::nan("");
  row.final_weak_pc_norm = std::nan("");
  row.t_est_or_horizon = std::nan("");
  try {
    const ExponentSet e = exponents(config.dim, config.d, config.alpha, sigma, sigma, p);
    row.p_c = e.p_c;
    row.p_F_sigma = e.p_F_sigma;
    row.ell = e.ell;

    const ModelParams model = build_model(config, p, row_forcing(config, sigma));
    const SolveReport rep = run(model, config.horizon, build_control(config));
    row.classification = to_string(rep.classification);
    if (const auto* b = std::get_if<BlowUp>(&rep.classification)) {
      row.t_est_or_horizon = b->t_est;
    } else {
      row.t_est_or_horizon = rep.times.back();
    }
    row.final_sup = rep.final_state.sup_abs();
    if (e.p_c > 1.0) row.final_weak_pc_norm = weak_norm(rep.final_state, e.p_c);
  } catch (const std::exception& ex) {
    std::string reason = ex.what();
    std::replace_if(reason.begin(), reason.end(), [](char c) { return c == ',' || c == '\n' || c == '"'; }, ';');
    row.classification = "Inconclusive:" + reason;
  }
  row.wallclock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<ScanRow> scan(const ExperimentConfig& config, unsigned jobs) {
  std::vector<std::pair<double, double>> pairs;  // (sigma, p)
  for (double s : config.scan_sigma) {
    for (double p : config.scan_p) pairs.emplace_back(s, p);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<ScanRow> rows(pairs.size());
  if (pairs.empty()) return rows;
  if (jobs == 0) jobs = default_jobs();
  const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      rows[i] = run_scan_row(config, pairs[i].second, pairs[i].first);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  write_csv_row(out, scan_columns());
  for (const ScanRow& r : rows) {
    write_csv_row(out, {format_number(r.p), format_number(r.sigma), format_number(r.d), format_number(r.alpha),
                        std::to_string(r.N), format_number(r.p_c), format_number(r.p_F_sigma),
                        format_number(r.ell), r.classification, format_number(r.t_est_or_horizon),
                        format_number(r.final_sup), format_number(r.final_weak_pc_norm),
                        format_number(r.wallclock_s)});
  }
}

}  // namespace fujita::harness
