#include "fujita/run.hpp"

#include <algorithm>
#include <cmath>

#include "fujita/error.hpp"
#include "fujita/exponents.hpp"
#include "fujita/norms.hpp"
#include "fujita/spectral.hpp"

namespace fujita {
namespace {

double sup_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Largest |u| on the face x_k = -L of the box, over all axes k.
double boundary_max(const GridSpec& g, std::span<const double> v) {
  const std::size_t n = g.points_per_axis;
  double m = 0.0;
  std::size_t stride = 1;
  for (int axis = g.dim - 1; axis >= 0; --axis) {
    // Points with index 0 on this axis: flat = outer * (n * stride) + inner.
    const std::size_t outer_count = v.size() / (n * stride);
    for (std::size_t outer = 0; outer < outer_count; ++outer) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        m = std::max(m, std::abs(v[outer * n * stride + inner]));
      }
    }
    stride *= n;
  }
  return m;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

struct NormEvaluator {
  const ModelParams& params;
  std::vector<MonitoredNorm> norms;
  double p_c = 0.0;
  std::optional<double> r, mu;

  NormEvaluator(const ModelParams& pr, std::vector<MonitoredNorm> n) : params(pr), norms(std::move(n)) {
    const ExponentSet e = exponents(pr.grid.dim, pr.d, pr.alpha, large_time_exponent(pr.forcing),
                                    large_time_exponent(pr.forcing), pr.p);
    p_c = e.p_c;
    r = e.r;
    mu = e.mu;
  }

  double eval(MonitoredNorm which, const Field& u, double t, const Rearrangement& rearr) const {
    switch (which) {
      case MonitoredNorm::Sup: return u.sup_abs();
      case MonitoredNorm::WeakCritical: return weak_norm(rearr, p_c);
      case MonitoredNorm::XNorm: return std::pow(t, *mu) * weak_norm(rearr, *r);
      case MonitoredNorm::Lambda: return lambda_norm(u, params.alpha, params.p);
    }
    return 0.0;
  }

  bool needs_rearrangement() const {
    return std::any_of(norms.begin(), norms.end(), [](MonitoredNorm n) {
      return n == MonitoredNorm::WeakCritical || n == MonitoredNorm::XNorm;
    });
  }
};

}  // namespace

std::string norm_name(MonitoredNorm n) {
  switch (n) {
    case MonitoredNorm::Sup: return "sup";
    case MonitoredNorm::WeakCritical: return "weak_pc";
    case MonitoredNorm::XNorm: return "x_norm";
    case MonitoredNorm::Lambda: return "lambda";
  }
  return "unknown";
}

std::string to_string(const Classification& c) {
  if (std::holds_alternative<GlobalCandidate>(c)) return "GlobalCandidate";
  if (std::holds_alternative<BlowUp>(c)) return "BlowUp";
  return "Inconclusive:" + std::get<Inconclusive>(c).reason;
}

const std::vector<double>* SolveReport::trace(MonitoredNorm n) const {
  for (const auto& t : traces) {
    if (t.norm == n) return &t.values;
  }
  return nullptr;
}

std::vector<MonitoredNorm> available_norms(const ModelParams& params) {
  std::vector<MonitoredNorm> out{MonitoredNorm::Sup};
  const ExponentSet e = exponents(params.grid.dim, params.d, params.alpha, large_time_exponent(params.forcing),
                                  large_time_exponent(params.forcing), params.p);
  if (e.p_c > 1.0) out.push_back(MonitoredNorm::WeakCritical);
  if (e.mu && *e.r > 1.0) out.push_back(MonitoredNorm::XNorm);
  if (params.alpha > 0.0) out.push_back(MonitoredNorm::Lambda);
  return out;
}

double estimate_blowup_time(const std::vector<double>& times, const std::vector<double>& sup, double p) {
  const std::size_t count = std::min<std::size_t>(10, times.size());
  if (count < 2) return times.empty() ? 0.0 : times.back();
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = times.size() - count; i < times.size(); ++i) {
    const double t = times[i];
    const double y = std::pow(sup[i], 1.0 - p);
    st += t; sy += y; stt += t * t; sty += t * y;
  }
  const double n = static_cast<double>(count);
  const double slope = (n * sty - st * sy) / (n * stt - st * st);
  const double icept = (sy - slope * st) / n;
  if (!(slope < 0.0)) return times.back();
  return -icept / slope;
}

SolveReport run(const ModelParams& params, double horizon, const RunControl& control) {
  return run(Stepper(params), horizon, control);
}

SolveReport run(const Stepper& stepper, double horizon, const RunControl& control) {
  const ModelParams& params = stepper.params();
  if (!(horizon > 0.0)) throw Error(ErrorCode::InvalidArgument, "horizon must be positive");
  if (!(control.dt_init > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt_init must be positive");
  const GridSpec& g = params.grid;

  NormEvaluator evaluator(params, control.norms.empty() ? available_norms(params) : control.norms);
  const double sup0 = params.u0.sup_abs();
  const double threshold = control.blow_threshold.value_or(std::max(1e6 * sup0, 1e3));

  SolveReport report{{}, {}, GlobalCandidate{}, {}, {}, params.u0};
  report.diagnostics.blow_threshold = threshold;
  for (MonitoredNorm n : evaluator.norms) report.traces.push_back({n, {}});

  Stepper::State state = stepper.make_state(params.u0.values());
  stepper.prepare(state);

  auto record = [&](double t) {
    const Field u(g, state.u);
    Rearrangement rearr;
    if (evaluator.needs_rearrangement()) rearr = rearrangement(u);
    report.times.push_back(t);
    for (auto& tr : report.traces) tr.values.push_back(evaluator.eval(tr.norm, u, t, rearr));
    report.diagnostics.tail_fractions.push_back(spectral_tail_fraction(Spectrum{g, state.u_hat}));
  };
  record(0.0);
  if (control.snapshot_interval > 0.0) report.snapshots.push_back({0.0, params.u0});

  double t = 0.0;
  double dt = std::min(control.dt_init, control.dt_max);
  // Snapshot k sits at k * interval; times within 1e-12 relative of the
  // horizon are moved onto it so rounding never leaves a sliver step.
  std::size_t snapshot_index = 1;
  const auto snapshot_time = [&](std::size_t k) {
    const double s = static_cast<double>(k) * control.snapshot_interval;
    return s >= horizon * (1.0 - 1e-12) ? horizon : s;
  };
  double next_snapshot = control.snapshot_interval > 0.0 ? snapshot_time(snapshot_index) : horizon;
  Stepper::State full, half, two_halves;
  std::optional<Classification> verdict;

  while (!verdict) {
    if (t >= horizon * (1.0 - 1e-12)) break;
    if (report.diagnostics.accepted_steps >= control.max_steps) {
      verdict = Inconclusive{"step budget exhausted"};
      break;
    }
    double trial = std::min({dt, horizon - t, control.dt_max});
    bool clipped = false;
    if (control.snapshot_interval > 0.0 && t + trial >= next_snapshot) {
      trial = next_snapshot - t;
      clipped = true;
    }
    if (trial < control.dt_min) {
      verdict = Inconclusive{"dt underflow"};
      break;
    }

    stepper.advance(state, t, trial, full);
    stepper.advance(state, t, 0.5 * trial, half);
    stepper.prepare(half);
    stepper.advance(half, t + 0.5 * trial, 0.5 * trial, two_halves);

    const double sup_prev = sup_abs(state.u);
    const double sup_new = sup_abs(two_halves.u);
    bool reject = !all_finite(two_halves.u) || !all_finite(full.u);
    double err = 0.0;
    if (!reject) {
      double diff = 0.0;
      for (std::size_t i = 0; i < full.u.size(); ++i) diff = std::max(diff, std::abs(full.u[i] - two_halves.u[i]));
      err = sup_new > 0.0 ? diff / sup_new : diff;
      reject = err > control.rel_tol || (sup_prev > 0.0 && sup_new > (1.0 + control.growth_limit) * sup_prev);
    }
    if (reject) {
      ++report.diagnostics.rejected_steps;
      dt = 0.5 * trial;
      if (dt < control.dt_min) verdict = Inconclusive{"dt underflow"};
      continue;
    }

    if (clipped) t = next_snapshot;
    else if (trial == horizon - t) t = horizon;
    else t += trial;
    std::swap(state, two_halves);
    stepper.prepare(state);
    ++report.diagnostics.accepted_steps;
    record(t);
    if (clipped) {
      report.snapshots.push_back({t, Field(g, state.u)});
      next_snapshot = snapshot_time(++snapshot_index);
    }
    if (err < 0.25 * control.rel_tol && !clipped) dt = 1.5 * trial;
    else if (!clipped) dt = trial;

    if (sup_new > threshold) {
      const auto& sup = *report.trace(MonitoredNorm::Sup);
      verdict = BlowUp{estimate_blowup_time(report.times, sup, params.p)};
      break;
    }
    if (report.diagnostics.tail_fractions.back() > control.tail_tolerance) {
      verdict = Inconclusive{"spectral-tail overflow"};
      break;
    }
    if (sup_new > 0.0) {
      const double ratio = boundary_max(g, state.u) / sup_new;
      report.diagnostics.max_boundary_ratio = std::max(report.diagnostics.max_boundary_ratio, ratio);
      if (ratio > control.boundary_tolerance) {
        verdict = Inconclusive{"box-boundary contamination"};
        break;
      }
    }
  }

  if (!verdict) {
    // Every monitored norm must stay within 10x its median over [T/2, T].
    bool bounded = true;
    for (const auto& tr : report.traces) {
      std::vector<double> late;
      for (std::size_t i = 0; i < report.times.size(); ++i) {
        if (report.times[i] >= 0.5 * horizon) late.push_back(tr.values[i]);
      }
      if (late.empty()) continue;
      const double med = median(late);
      const double top = *std::max_element(late.begin(), late.end());
      if (!(top <= 10.0 * med)) bounded = false;
    }
    verdict = bounded ? Classification{GlobalCandidate{}} : Classification{Inconclusive{"norm growth on [T/2, T]"}};
  }
  report.classification = *verdict;
  report.final_state = Field(g, state.u);
  return report;
}

}  // namespace fujita
