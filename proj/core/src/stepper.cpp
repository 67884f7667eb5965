#include <cmath>

#include "fujita/error.hpp"
#include "fujita/solver.hpp"
#include "fujita/spectral.hpp"

namespace fujita {

double phi1(double z) {
  if (std::abs(z) < 1e-4) return 1.0 - z / 2.0 + z * z / 6.0 - z * z * z / 24.0;
  return -std::expm1(-z) / z;
}

double phi2(double z) {
  // The closed form loses digits to cancellation well above 1e-4, so the
  // series is kept longer here.
  if (std::abs(z) < 0.1) {
    double term = 0.5, sum = 0.0;
    for (int k = 0; k < 12; ++k) {
      sum += term;
      term *= -z / (k + 3.0);
    }
    return sum;
  }
  return (z + std::expm1(-z)) / (z * z);
}

Reaction hardy_henon_reaction(const ModelParams& params) {
  const double p = params.p;
  const bool signed_power = params.signed_nonlinearity;
  if (params.alpha == 0.0) {
    return [p, signed_power](std::span<const double> u, std::span<double> out) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = std::abs(u[i]);
        const double v = p == 2.0 ? a * a : std::pow(a, p);
        out[i] = signed_power && u[i] < 0.0 ? -v : v;
      }
    };
  }
  const Field weight = radial_weight(params.grid, params.alpha, params.reg_radius);
  return [p, signed_power, weight](std::span<const double> u, std::span<double> out) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double a = std::abs(u[i]);
      const double v = weight[i] * (p == 2.0 ? a * a : std::pow(a, p));
      out[i] = signed_power && u[i] < 0.0 ? -v : v;
    }
  };
}

Field nonlinearity(const Field& u, const ModelParams& params) {
  require_same_grid(u.grid(), params.grid);
  RealVector out(u.size());
  hardy_henon_reaction(params)(u.values(), out);
  return Field(u.grid(), std::move(out));
}

Stepper::Stepper(const ModelParams& params) : Stepper(params, hardy_henon_reaction(params)) {}

Stepper::Stepper(const ModelParams& params, Reaction reaction)
    : params_(params), reaction_(std::move(reaction)) {
  validate(params_);
  classes_ = radial_classes(params_.grid);
  lambda_ = class_xi2(params_.grid, *classes_);
  for (double& l : lambda_) l = laplacian_symbol(l, params_.d);
  const Spectrum& ws = params_.w.spectrum();
  w_hat_ = ws.coeffs;
}

Stepper::State Stepper::make_state(std::span<const double> u) const {
  State s;
  s.u.assign(u.begin(), u.end());
  s.u_hat.resize(params_.grid.spectral_size());
  forward_transform(params_.grid, s.u.data(), s.u_hat.data());
  return s;
}

void Stepper::prepare(State& s) const {
  thread_local RealVector f;
  f.resize(s.u.size());
  reaction_(s.u, f);
  s.f_hat.resize(params_.grid.spectral_size());
  forward_transform(params_.grid, f.data(), s.f_hat.data());
}

void Stepper::advance(const State& in, double t0, double dt, State& out) const {
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  const GridSpec& g = params_.grid;
  const std::size_t nc = lambda_.size();
  std::vector<double> E(nc), P1(nc), P2(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const double z = lambda_[c] * dt;
    E[c] = std::exp(-z);
    P1[c] = dt * phi1(z);
    P2[c] = dt * phi2(z);
  }
  std::vector<double> G;
  const bool forced = !is_zero(params_.forcing);
  if (forced) G = forcing_multipliers(params_.forcing, t0, dt, lambda_);

  const auto& cls = classes_->class_of;
  const std::size_t ns = g.spectral_size();
  // Predictor: exact linear flow, frozen source, exact forcing.
  out.u_hat.resize(ns);
  for (std::size_t k = 0; k < ns; ++k) {
    const auto c = cls[k];
    auto v = E[c] * in.u_hat[k] + P1[c] * in.f_hat[k];
    if (forced) v += G[c] * w_hat_[k];
    out.u_hat[k] = v;
  }
  out.u.resize(in.u.size());
  inverse_transform(g, out.u_hat.data(), out.u.data());

  // Corrector: linear-in-time interpolation of the source between the ends.
  thread_local RealVector f;
  thread_local ComplexVector f_hat;
  f.resize(in.u.size());
  f_hat.resize(ns);
  reaction_(out.u, f);
  forward_transform(g, f.data(), f_hat.data());
  for (std::size_t k = 0; k < ns; ++k) out.u_hat[k] += P2[cls[k]] * (f_hat[k] - in.f_hat[k]);
  inverse_transform(g, out.u_hat.data(), out.u.data());
  out.f_hat.clear();
}

Field Stepper::step(const Field& u, double t0, double dt) const {
  require_same_grid(u.grid(), params_.grid);
  State s = make_state(u.values());
  prepare(s);
  State next;
  advance(s, t0, dt, next);
  return Field(params_.grid, std::move(next.u));
}

Field duhamel_step(const Field& u, double t0, double dt, const ModelParams& params) {
  return Stepper(params).step(u, t0, dt);
}

}  // namespace fujita
