#include "fujita/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fujita/error.hpp"
#include "fujita/spectral.hpp"

namespace fujita {

double zeta(const ForcingSpec& forcing, double t) {
  return std::visit(
      [t](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ZeroForcing>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, PurePower>) {
          return f.sigma == 0.0 ? 1.0 : std::pow(t, f.sigma);
        } else {
          if (t <= f.crossover_time) return std::pow(t, f.sigma);
          return std::pow(f.crossover_time, f.sigma - f.m) * std::pow(t, f.m);
        }
      },
      forcing);
}

double small_time_exponent(const ForcingSpec& forcing) {
  if (const auto* f = std::get_if<PurePower>(&forcing)) return f->sigma;
  if (const auto* f = std::get_if<TwoRegime>(&forcing)) return f->sigma;
  return 0.0;
}

double large_time_exponent(const ForcingSpec& forcing) {
  if (const auto* f = std::get_if<PurePower>(&forcing)) return f->sigma;
  if (const auto* f = std::get_if<TwoRegime>(&forcing)) return f->m;
  return 0.0;
}

bool is_zero(const ForcingSpec& forcing) { return std::holds_alternative<ZeroForcing>(forcing); }

void validate(const ForcingSpec& forcing) {
  if (const auto* f = std::get_if<PurePower>(&forcing)) {
    if (!(f->sigma > -1.0)) throw Error(ErrorCode::InvalidArgument, "forcing exponent sigma must exceed -1");
  }
  if (const auto* f = std::get_if<TwoRegime>(&forcing)) {
    if (!(f->sigma > -1.0)) throw Error(ErrorCode::InvalidArgument, "forcing exponent sigma must exceed -1");
    if (!std::isfinite(f->m)) throw Error(ErrorCode::InvalidArgument, "forcing exponent m must be finite");
    if (!(f->crossover_time > 0.0)) throw Error(ErrorCode::InvalidArgument, "crossover_time must be positive");
  }
}

ModelParams make_model(const GridSpec& grid, double d, double p, double alpha) {
  return ModelParams{grid, d, p, alpha, ZeroForcing{}, Field::zeros(grid), Field::zeros(grid),
                     default_reg_radius(grid), false};
}

void validate(const ModelParams& params) {
  const int N = params.grid.dim;
  if (!(params.d > 0.0)) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (!(params.p > 1.0)) throw Error(ErrorCode::InvalidArgument, "p must exceed 1");
  if (params.alpha < 0.0 && !(-params.alpha < std::min(2.0 * params.d, static_cast<double>(N)))) {
    throw Error(ErrorCode::InvalidArgument,
                "alpha must satisfy alpha >= 0 or -alpha < min(2d, N) = " +
                    std::to_string(std::min(2.0 * params.d, static_cast<double>(N))));
  }
  if (!(params.reg_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "reg_radius must be positive");
  validate(params.forcing);
  require_same_grid(params.grid, params.w.grid());
  require_same_grid(params.grid, params.u0.grid());
}

}  // namespace fujita
