#pragma once

#include <variant>

#include "fujita/field.hpp"

namespace fujita {

struct ZeroForcing {};

// zeta(t) = t^sigma.
struct PurePower {
  double sigma = 0.0;
};

// zeta(t) = t^sigma for t <= crossover_time, c t^m afterwards, with c making
// zeta continuous.
struct TwoRegime {
  double sigma = 0.0;
  double m = 0.0;
  double crossover_time = 1.0;
};

using ForcingSpec = std::variant<ZeroForcing, PurePower, TwoRegime>;

double zeta(const ForcingSpec& forcing, double t);
// Exponent governing zeta near t = 0 (0 for ZeroForcing).
double small_time_exponent(const ForcingSpec& forcing);
// Exponent governing zeta as t -> infinity (0 for ZeroForcing).
double large_time_exponent(const ForcingSpec& forcing);
bool is_zero(const ForcingSpec& forcing);
void validate(const ForcingSpec& forcing);

// u_t + (-Delta)^d u = |x|^alpha |u|^p + zeta(t) w(x), u(0) = u0.
struct ModelParams {
  GridSpec grid;
  double d = 1.0;
  double p = 2.0;
  double alpha = 0.0;
  ForcingSpec forcing = ZeroForcing{};
  Field w;
  Field u0;
  double reg_radius = 0.0;
  // |u|^{p-1} u instead of |u|^p.
  bool signed_nonlinearity = false;
};

// Builds params with reg_radius = h/2 and zero data.
ModelParams make_model(const GridSpec& grid, double d, double p, double alpha);

// Checks p > 1, d > 0, alpha >= 0 or 0 < -alpha < min(2d, N), the forcing
// exponents and that w, u0 live on the grid.
void validate(const ModelParams& params);

}  // namespace fujita
