// Command-line front end: exponents, kernel, solve, scan, certify, report.
// Exit codes: 0 success, 1 runtime or partial failure, 2 configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fujita/certifier.hpp"
#include "fujita/error.hpp"
#include "fujita/exponents.hpp"
#include "fujita/field_io.hpp"
#include "fujita/harness/config.hpp"
#include "fujita/harness/csv.hpp"
#include "fujita/harness/report.hpp"
#include "fujita/harness/scan.hpp"
#include "fujita/kernels.hpp"
#include "fujita/run.hpp"

namespace fs = std::filesystem;
using namespace fujita;
using harness::format_number;

namespace {

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kConfig = 2;

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(std::stod(item));
  if (parts.size() != 3) throw Error(ErrorCode::ConfigError, "--grid expects N,L,n");
  return parts;
}

int cmd_exponents(int N, double d, double alpha, double sigma, std::optional<double> m, double p) {
  const double mm = m.value_or(sigma);
  const ExponentSet e = exponents(N, d, alpha, sigma, mm, p);
  const std::string r = e.r ? format_number(*e.r) : "none";
  const std::string mu = e.mu ? format_number(*e.mu) : "none";
  std::cout << "p_c=" << format_number(e.p_c) << "\n"
            << "p_F_sigma=" << format_number(e.p_F_sigma) << "\n"
            << "p_F_m=" << format_number(e.p_F_m) << "\n"
            << "ell=" << format_number(e.ell) << "\n"
            << "r_window_lower=" << format_number(e.r_window.lower) << "\n"
            << "r_window_upper=" << format_number(e.r_window.upper) << "\n"
            << "r=" << r << "\n"
            << "mu=" << mu << "\n\n";
  harness::write_csv_row(std::cout, {"N", "d", "alpha", "sigma", "m", "p", "p_c", "p_F_sigma", "p_F_m", "ell",
                                     "r_window_lower", "r_window_upper", "r", "mu"});
  harness::write_csv_row(std::cout, {std::to_string(N), format_number(d), format_number(alpha), format_number(sigma),
                                     format_number(mm), format_number(p), format_number(e.p_c),
                                     format_number(e.p_F_sigma), format_number(e.p_F_m), format_number(e.ell),
                                     format_number(e.r_window.lower), format_number(e.r_window.upper), r, mu});
  return kOk;
}

int cmd_kernel(double d, const std::string& grid_spec, double t, const std::string& out_path) {
  const auto g = parse_grid(grid_spec);
  const GridSpec grid = make_grid(static_cast<int>(g[0]), g[1], static_cast<std::size_t>(g[2]));
  const KernelProfile k = kernel_profile(grid, d, t);
  if (!k.resolved()) {
    std::cerr << "warning: Nyquist tail " << k.nyquist_tail << " exceeds 1e-10; kernel under-resolved\n";
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::IoError, "cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  std::vector<std::string> header;
  for (int a = 1; a <= grid.dim; ++a) header.push_back("x_" + std::to_string(a));
  header.push_back("value");
  harness::write_csv_row(out, header);
  for (std::size_t i = 0; i < k.profile.size(); ++i) {
    const auto idx = unravel(grid, i);
    std::vector<std::string> row;
    for (int a = 0; a < grid.dim; ++a) row.push_back(format_number(grid.coordinate(idx[static_cast<std::size_t>(a)])));
    row.push_back(format_number(k.profile[i]));
    harness::write_csv_row(out, row);
  }
  return kOk;
}

int cmd_solve(const std::string& config_path, const std::string& out_dir_opt) {
  const harness::ExperimentConfig cfg = harness::parse_config(config_path);
  const ModelParams model = harness::build_model(cfg, cfg.p, harness::config_forcing(cfg));
  const SolveReport rep = run(model, cfg.horizon, harness::build_control(cfg));

  const fs::path dir = out_dir_opt.empty() ? fs::path(cfg.output_directory) : fs::path(out_dir_opt);
  fs::create_directories(dir);
  {
    std::ofstream csv(dir / "trajectory.csv", std::ios::binary);
    std::vector<std::string> header{"time"};
    for (const auto& tr : rep.traces) header.push_back(norm_name(tr.norm));
    header.push_back("tail_fraction");
    harness::write_csv_row(csv, header);
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
      std::vector<std::string> row{format_number(rep.times[i])};
      for (const auto& tr : rep.traces) row.push_back(format_number(tr.values[i]));
      row.push_back(format_number(rep.diagnostics.tail_fractions[i]));
      harness::write_csv_row(csv, row);
    }
    if (!csv) throw Error(ErrorCode::IoError, "failed writing trajectory.csv");
  }
  if (!rep.snapshots.empty()) {
    const fs::path bin = dir / "trajectory.bin";
    std::ofstream out(bin, std::ios::binary);
    for (const auto& s : rep.snapshots) write_frame(out, s.field, s.time, model.d, model.p, model.alpha);
    std::ofstream side(bin.string() + ".json", std::ios::binary);
    side << harness::serialize_config(cfg);
  }
  std::cout << "classification=" << to_string(rep.classification) << "\n"
            << "final_time=" << format_number(rep.times.back()) << "\n"
            << "final_sup=" << format_number(rep.final_state.sup_abs()) << "\n"
            << "accepted_steps=" << rep.diagnostics.accepted_steps << "\n"
            << "rejected_steps=" << rep.diagnostics.rejected_steps << "\n"
            << "max_boundary_ratio=" << format_number(rep.diagnostics.max_boundary_ratio) << "\n"
            << "output=" << dir.string() << "\n";
  return kOk;
}

int cmd_scan(const std::string& config_path, unsigned jobs, const std::string& out_path) {
  const harness::ExperimentConfig cfg = harness::parse_config(config_path);
  const auto rows = harness::scan(cfg, jobs);
  const fs::path path = out_path.empty() ? fs::path(cfg.output_directory) / "scan.csv" : fs::path(out_path);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    return kRuntime;
  }
  harness::write_scan_csv(out, rows);
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << path.string() << "\n";
    return kRuntime;
  }
  for (const auto& r : rows) {
    std::cout << "sigma=" << format_number(r.sigma) << " p=" << format_number(r.p) << " -> " << r.classification
              << " (" << format_number(r.t_est_or_horizon) << ")\n";
  }
  std::cout << "wrote " << path.string() << "\n";
  return kOk;
}

int cmd_certify(const std::string& traj_path, double T, const std::string& config_opt, bool allow_fractional) {
  const std::string config_path = config_opt.empty() ? traj_path + ".json" : config_opt;
  const harness::ExperimentConfig cfg = harness::parse_config(config_path);
  const ModelParams model = harness::build_model(cfg, cfg.p, harness::config_forcing(cfg));
  const auto frames = read_frames(traj_path);
  std::vector<double> times;
  std::vector<Field> fields;
  for (const auto& f : frames) {
    if (f.d != model.d || f.p != model.p || f.alpha != model.alpha) {
      throw Error(ErrorCode::ConfigError, "trajectory header does not match the configuration");
    }
    times.push_back(f.time);
    fields.push_back(f.field);
  }
  const CertificateReport r = certificate(times, fields, model, T, allow_fractional);
  harness::write_csv_row(std::cout, {"T", "lhs_nonlinear", "forcing_term", "I1", "I2", "I11", "I21", "theta", "verdict"});
  harness::write_csv_row(std::cout, {format_number(r.T), format_number(r.lhs_nonlinear), format_number(r.forcing_term),
                                     format_number(r.I1), format_number(r.I2), format_number(r.I11),
                                     format_number(r.I21), format_number(r.theta), to_string(r.verdict)});
  std::cout << "\nT = " << r.T << ": nonlinear " << r.lhs_nonlinear << " + forcing " << r.forcing_term
            << (r.verdict == Verdict::InequalityViolated ? " > " : " vs ") << "I1 " << r.I1 << " + I2 " << r.I2
            << " -> " << to_string(r.verdict) << " (theta = " << r.theta << ")\n";
  return kOk;
}

int cmd_report(const std::string& csv_path, const std::string& out_dir_opt) {
  const harness::ScanReport rep = harness::report_file(csv_path);
  const fs::path in(csv_path);
  const fs::path dir = out_dir_opt.empty() ? in.parent_path() : fs::path(out_dir_opt);
  if (!dir.empty()) fs::create_directories(dir);
  const std::string stem = in.stem().string();
  std::ofstream(dir / (stem + "_summary.txt"), std::ios::binary) << rep.summary;
  std::ofstream(dir / (stem + "_plot.csv"), std::ios::binary) << rep.plot_data;
  std::cout << rep.summary;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forced fractional Fujita problem: simulation and analysis"};
  app.require_subcommand(1);

  int N = 1;
  double d = 1.0, alpha = 0.0, sigma = 0.0, p = 2.0, t = 1.0, T = 0.0;
  std::optional<double> m;
  std::string grid_spec, config, out, traj, csv;
  unsigned jobs = 0;
  bool allow_fractional = false;

  auto* ex = app.add_subcommand("exponents", "Print the critical exponents");
  ex->add_option("--N", N, "Dimension")->required();
  ex->add_option("--d", d, "Order of the Laplacian power")->required();
  ex->add_option("--alpha", alpha, "Weight exponent")->required();
  ex->add_option("--sigma", sigma, "Forcing exponent near t = 0")->required();
  ex->add_option("--m", m, "Forcing exponent as t -> infinity (default sigma)");
  ex->add_option("--p", p, "Nonlinearity power")->required();

  auto* ke = app.add_subcommand("kernel", "Dump the semigroup kernel profile as CSV");
  ke->add_option("--d", d, "Order of the Laplacian power")->required();
  ke->add_option("--grid", grid_spec, "N,L,n")->required();
  ke->add_option("--t", t, "Time (default 1)");
  ke->add_option("--out", out, "Output file (default stdout)");

  auto* so = app.add_subcommand("solve", "Run one simulation");
  so->add_option("--config", config, "Config file")->required();
  so->add_option("--out", out, "Output directory (default output.directory)");

  auto* sc = app.add_subcommand("scan", "Run the (p, sigma) dichotomy scan");
  sc->add_option("--config", config, "Config file")->required();
  sc->add_option("--jobs", jobs, "Concurrent rows (default FUJITA_THREADS or core count)");
  sc->add_option("--out", out, "CSV path (default <output.directory>/scan.csv)");

  auto* ce = app.add_subcommand("certify", "Evaluate the test-function inequality on a trajectory dump");
  ce->add_option("--traj", traj, "Trajectory dump")->required();
  ce->add_option("--T", T, "Test-function scale")->required();
  ce->add_option("--config", config, "Config (default <traj>.json)");
  ce->add_flag("--allow-fractional", allow_fractional, "Evaluate for non-integer d (Indeterminate verdict)");

  auto* re = app.add_subcommand("report", "Summarize a scan CSV");
  re->add_option("--csv", csv, "Scan CSV")->required();
  re->add_option("--out-dir", out, "Output directory (default next to the CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*ex) return cmd_exponents(N, d, alpha, sigma, m, p);
    if (*ke) return cmd_kernel(d, grid_spec, t, out);
    if (*so) return cmd_solve(config, out);
    if (*sc) return cmd_scan(config, jobs, out);
    if (*ce) return cmd_certify(traj, T, config, allow_fractional);
    if (*re) return cmd_report(csv, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError ? kConfig : kRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kRuntime;
}
