#pragma once

#include <cstddef>
#include <vector>

#include "fujita/model.hpp"

namespace fujita {

struct PicardOptions {
  std::size_t mesh_intervals = 256;
  double tol = 1e-12;
  int max_iter = 50;
};

struct PicardResult {
  std::vector<double> times;      // uniform mesh on [0, T]
  std::vector<Field> trajectory;  // final iterate at the mesh times
  std::vector<double> residuals;  // residual of iterate j+1 against iterate j
  int iterations = 0;
  bool converged = false;
};

// Successive approximations u_1 = S(t) u0, u_{j+1} = u_1 + A(u_j) + W with
//   A(v)(t) = int_0^t S(t - s) F(v(s)) ds,  W(t) = int_0^t zeta(s) S(t - s) w ds.
// A is evaluated exactly for the piecewise-linear interpolant of F(v) on the
// mesh, W with the per-mode forcing quadrature. The residual is the sup over
// the mesh of the weak L^{p_c} norm of the update (sup norm when p_c <= 1).
// Throws NonContraction when the residual fails to decrease three times in a row.
PicardResult picard_solve(const ModelParams& params, double horizon, const PicardOptions& options = {});

}  // namespace fujita
