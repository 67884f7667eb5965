#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fujita/model.hpp"
#include "fujita/run.hpp"

namespace fujita::harness {

// Named data for u0 and w.
//   zero
//   gaussian:  amplitude * exp(-|x - center|^2 / width^2)
//   power_law: amplitude * |x|^{-exponent}, capped at the regularization
//              radius; exponent may be given numerically or by rule
//              "critical_data" ((2d + alpha)/(p - 1)) or "critical_forcing" (N/ell).
//              cutoff_radius > 0 multiplies by psi2-style smooth cutoff that
//              is 1 for |x| <= cutoff_radius and 0 beyond 2 cutoff_radius.
struct DataPreset {
  std::string preset = "zero";
  double amplitude = 1.0;
  double width = 1.0;
  std::vector<double> center;
  std::optional<double> exponent;
  std::string exponent_rule;
  double cutoff_radius = 0.0;

  bool operator==(const DataPreset&) const = default;
};

struct ForcingConfig {
  std::string kind = "zero";  // zero | pure_power | two_regime
  double sigma = 0.0;
  double m = 0.0;
  double crossover_time = 1.0;

  bool operator==(const ForcingConfig&) const = default;
};

struct ExperimentConfig {
  // grid
  int dim = 1;
  double half_width = 1.0;
  std::size_t points_per_axis = 64;
  // model
  double d = 1.0;
  double p = 2.0;
  double alpha = 0.0;
  bool signed_nonlinearity = false;
  std::optional<double> reg_radius;  // default h/2
  ForcingConfig forcing;
  DataPreset w;
  DataPreset u0;
  // Amplitude of seeded uniform noise in [-1, 1] added to u0.
  double perturbation = 0.0;
  // run
  double horizon = 1.0;
  double dt_init = 1e-3;
  std::optional<double> blow_threshold;  // default max(1e6 sup u0, 1e3)
  double dt_max = std::numeric_limits<double>::infinity();
  double boundary_tolerance = 1e-6;
  double tail_tolerance = 1e-4;
  double snapshot_interval = 0.0;
  // scan
  std::vector<double> scan_p;
  std::vector<double> scan_sigma;
  // Small-time exponent and crossover used by TwoRegime rows (sigma > 0).
  double two_regime_sigma = -0.5;
  double two_regime_crossover = 1.0;
  std::uint64_t seed = 0;
  std::string output_directory = "out";

  bool operator==(const ExperimentConfig&) const = default;
};

// Throws fujita::Error(ConfigError) with a key path on any problem.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

// Forcing for a scan row: PurePower{sigma} for sigma <= 0, TwoRegime with
// m = sigma for sigma > 0.
ForcingSpec row_forcing(const ExperimentConfig& config, double sigma);
ForcingSpec config_forcing(const ExperimentConfig& config);

GridSpec config_grid(const ExperimentConfig& config);
Field build_data(const DataPreset& preset, const GridSpec& grid, double d, double p, double alpha,
                 double sigma, double reg_radius);

// Model for the given (p, forcing); w and u0 built from presets, u0 perturbed
// with the seeded noise.
ModelParams build_model(const ExperimentConfig& config, double p, const ForcingSpec& forcing);
RunControl build_control(const ExperimentConfig& config);

}  // namespace fujita::harness
