#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fujita/model.hpp"
#include "fujita/solver.hpp"

namespace fujita {

enum class MonitoredNorm { Sup, WeakCritical, XNorm, Lambda };

std::string norm_name(MonitoredNorm n);

struct RunControl {
  double dt_init = 1e-3;
  // Default: max(1e6 * sup u0, 1e3).
  std::optional<double> blow_threshold;
  double dt_max = std::numeric_limits<double>::infinity();
  double dt_min = 1e-12;
  double rel_tol = 1e-6;
  double growth_limit = 0.2;
  double boundary_tolerance = 1e-6;
  double tail_tolerance = 1e-4;
  std::size_t max_steps = 10'000'000;
  // Empty means every norm that is defined for the parameters.
  std::vector<MonitoredNorm> norms;
  // When positive, fields are kept at multiples of this interval (the step
  // size is clipped to land on them) and at t = 0.
  double snapshot_interval = 0.0;
};

struct GlobalCandidate {};
struct BlowUp {
  double t_est = 0.0;
};
struct Inconclusive {
  std::string reason;
};
using Classification = std::variant<GlobalCandidate, BlowUp, Inconclusive>;

std::string to_string(const Classification& c);

struct NormTrace {
  MonitoredNorm norm;
  std::vector<double> values;
};

struct Snapshot {
  double time;
  Field field;
};

struct RunDiagnostics {
  std::vector<double> tail_fractions;  // per recorded time
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double max_boundary_ratio = 0.0;
  double blow_threshold = 0.0;
  std::vector<double> picard_residuals;
};

struct SolveReport {
  std::vector<double> times;
  std::vector<NormTrace> traces;
  Classification classification;
  RunDiagnostics diagnostics;
  std::vector<Snapshot> snapshots;
  Field final_state;

  const std::vector<double>* trace(MonitoredNorm n) const;
};

// Norms that make sense for the parameters: the weak L^{p_c} norm needs
// p_c > 1, the X-norm needs a nonempty r-window, the Lambda norm alpha > 0.
std::vector<MonitoredNorm> available_norms(const ModelParams& params);

SolveReport run(const ModelParams& params, double horizon, const RunControl& control = {});
SolveReport run(const Stepper& stepper, double horizon, const RunControl& control = {});

// T* from sup ~ (T* - t)^{-1/(p-1)} fitted to the samples (least squares on
// sup^{1-p}); returns the last time if the fit does not decrease.
double estimate_blowup_time(const std::vector<double>& times, const std::vector<double>& sup, double p);

}  // namespace fujita
