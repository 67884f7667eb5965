#include "fujita/picard.hpp"

#include <cmath>
#include <string>

#include "fujita/error.hpp"
#include "fujita/exponents.hpp"
#include "fujita/norms.hpp"
#include "fujita/solver.hpp"
#include "fujita/spectral.hpp"
#include "fujita/transform.hpp"

namespace fujita {

PicardResult picard_solve(const ModelParams& params, double horizon, const PicardOptions& options) {
  validate(params);
  if (!(horizon > 0.0)) throw Error(ErrorCode::InvalidArgument, "horizon must be positive");
  if (options.mesh_intervals < 1) throw Error(ErrorCode::InvalidArgument, "mesh needs at least one interval");

  const GridSpec& g = params.grid;
  const std::size_t M = options.mesh_intervals;
  const double h = horizon / static_cast<double>(M);
  const std::size_t ns = g.spectral_size();
  const std::size_t np = g.total_points();

  const auto classes = radial_classes(g);
  std::vector<double> lambda = class_xi2(g, *classes);
  for (double& l : lambda) l = laplacian_symbol(l, params.d);
  const auto& cls = classes->class_of;
  const std::size_t nc = lambda.size();
  std::vector<double> E(nc), A0(nc), A1(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    const double z = lambda[c] * h;
    E[c] = std::exp(-z);
    A0[c] = h * (phi1(z) - phi2(z));
    A1[c] = h * phi2(z);
  }

  PicardResult result;
  result.times.resize(M + 1);
  for (std::size_t i = 0; i <= M; ++i) result.times[i] = h * static_cast<double>(i);

  // Linear part u_1 + W on the mesh, in spectral form.
  std::vector<ComplexVector> base(M + 1, ComplexVector(ns));
  {
    const ComplexVector& u0 = params.u0.spectrum().coeffs;
    const ComplexVector& w = params.w.spectrum().coeffs;
    ComplexVector W(ns, {0.0, 0.0});
    for (std::size_t i = 0; i <= M; ++i) {
      if (i > 0) {
        const std::vector<double> G = forcing_multipliers(params.forcing, result.times[i - 1], h, lambda);
        for (std::size_t k = 0; k < ns; ++k) W[k] = E[cls[k]] * W[k] + G[cls[k]] * w[k];
      }
      const double t = result.times[i];
      for (std::size_t k = 0; k < ns; ++k) {
        base[i][k] = std::exp(-t * lambda[cls[k]]) * u0[k] + W[k];
      }
    }
  }

  const Reaction F = hardy_henon_reaction(params);
  const double p_c = critical_lebesgue_exponent(g.dim, params.d, params.alpha, params.p);

  // Current iterate, starting from u_1 = S(t) u0.
  std::vector<RealVector> u(M + 1, RealVector(np));
  {
    const ComplexVector& u0 = params.u0.spectrum().coeffs;
    ComplexVector tmp(ns);
    for (std::size_t i = 0; i <= M; ++i) {
      for (std::size_t k = 0; k < ns; ++k) tmp[k] = std::exp(-result.times[i] * lambda[cls[k]]) * u0[k];
      inverse_transform(g, tmp.data(), u[i].data());
    }
  }

  RealVector f(np), next(np), diff(np);
  ComplexVector f_prev(ns), f_cur(ns), acc(ns), tmp(ns);
  int non_decreasing = 0;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    double residual = 0.0;
    std::vector<RealVector> updated(M + 1, RealVector(np));
    std::fill(acc.begin(), acc.end(), std::complex<double>(0.0, 0.0));
    for (std::size_t i = 0; i <= M; ++i) {
      F(u[i], f);
      forward_transform(g, f.data(), f_cur.data());
      if (i > 0) {
        for (std::size_t k = 0; k < ns; ++k) {
          const auto c = cls[k];
          acc[k] = E[c] * acc[k] + A0[c] * f_prev[k] + A1[c] * f_cur[k];
        }
      }
      std::swap(f_prev, f_cur);
      for (std::size_t k = 0; k < ns; ++k) tmp[k] = base[i][k] + acc[k];
      inverse_transform(g, tmp.data(), updated[i].data());

      for (std::size_t q = 0; q < np; ++q) diff[q] = updated[i][q] - u[i][q];
      const Field d(g, diff);
      residual = std::max(residual, p_c > 1.0 ? weak_norm(d, p_c) : d.sup_abs());
    }
    u.swap(updated);
    if (!result.residuals.empty() && residual >= result.residuals.back()) {
      ++non_decreasing;
    } else {
      non_decreasing = 0;
    }
    result.residuals.push_back(residual);
    result.iterations = iter;
    if (residual < options.tol) {
      result.converged = true;
      break;
    }
    if (non_decreasing >= 3) {
      throw Error(ErrorCode::NonContraction,
                  "residual failed to decrease for 3 iterations (last " + std::to_string(residual) + ")");
    }
  }

  result.trajectory.reserve(M + 1);
  for (std::size_t i = 0; i <= M; ++i) result.trajectory.emplace_back(g, std::move(u[i]));
  return result;
}

}  // namespace fujita
