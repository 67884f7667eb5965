#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fujita/aligned.hpp"
#include "fujita/model.hpp"
#include "fujita/transform.hpp"

namespace fujita {

// Pointwise source term: out[i] = F(u)[i].
using Reaction = std::function<void(std::span<const double> u, std::span<double> out)>;

// |x|^alpha |u|^p (or |x|^alpha |u|^{p-1} u) with the capped weight.
Reaction hardy_henon_reaction(const ModelParams& params);
Field nonlinearity(const Field& u, const ModelParams& params);

// Per-mode value of int_0^dt zeta(t0 + s) exp(-(dt - s) lambda) ds.
double forcing_mode_integral(const ForcingSpec& forcing, double t0, double dt, double lambda);
// The same for a list of decay rates (one per radial class).
std::vector<double> forcing_multipliers(const ForcingSpec& forcing, double t0, double dt,
                                        std::span<const double> lambdas);

// int_{t0}^{t0+dt} zeta(s) S(t0 + dt - s) w ds.
Field forcing_increment(double t0, double dt, const ModelParams& params);

// phi1(z) = (1 - e^{-z}) / z and phi2(z) = (z - 1 + e^{-z}) / z^2.
double phi1(double z);
double phi2(double z);

// Second-order exponential Runge-Kutta step of the Duhamel map with the
// forcing integrated exactly per mode.
class Stepper {
 public:
  explicit Stepper(const ModelParams& params);
  Stepper(const ModelParams& params, Reaction reaction);

  struct State {
    RealVector u;
    ComplexVector u_hat;
    ComplexVector f_hat;  // transform of F(u); filled by prepare()
  };

  State make_state(std::span<const double> u) const;
  void prepare(State& s) const;
  // out.u and out.u_hat receive the solution at t0 + dt; `in` must be prepared.
  void advance(const State& in, double t0, double dt, State& out) const;

  Field step(const Field& u, double t0, double dt) const;

  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
  Reaction reaction_;
  std::vector<double> lambda_;  // per radial class
  std::shared_ptr<const RadialClasses> classes_;
  ComplexVector w_hat_;
};

Field duhamel_step(const Field& u, double t0, double dt, const ModelParams& params);

}  // namespace fujita
