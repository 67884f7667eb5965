#include "fujita/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fujita/error.hpp"
#include "fujita/spectral.hpp"
#include "fujita/transform.hpp"

namespace fujita {

KernelProfile kernel_profile(const GridSpec& grid, double d, double t) {
  if (!(d > 0.0)) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");

  Spectrum s{grid, ComplexVector(grid.spectral_size(), {1.0, 0.0})};
  apply_radial_multiplier(s, [d, t](double xi2) { return std::exp(-t * laplacian_symbol(xi2, d)); });
  RealVector raw(grid.total_points());
  inverse_transform(grid, s.coeffs.data(), raw.data());

  // Move the origin from index 0 to index n/2 and divide by the cell measure.
  const std::size_t n = grid.points_per_axis;
  const double inv_cell = 1.0 / grid.cell_measure();
  RealVector shifted(raw.size());
  for (std::size_t flat = 0; flat < raw.size(); ++flat) {
    const auto idx = unravel(grid, flat);
    std::size_t src = 0;
    for (int k = 0; k < grid.dim; ++k) src = src * n + (idx[static_cast<std::size_t>(k)] + n / 2) % n;
    shifted[flat] = raw[src] * inv_cell;
  }

  const double nyq = grid.wavenumber_unit() * static_cast<double>(n / 2);
  KernelProfile k{grid, Field(grid, std::move(shifted)), d, t, 0.0};
  k.nyquist_tail = std::exp(-t * std::pow(nyq, 2.0 * d));
  return k;
}

double verify_kernel_scaling(double d, double t, const GridSpec& grid) {
  const KernelProfile direct = kernel_profile(grid, d, t);
  const double factor = std::pow(t, -1.0 / (2.0 * d));
  const GridSpec scaled{grid.dim, grid.half_width * factor, grid.points_per_axis};
  const KernelProfile unit = kernel_profile(scaled, d, 1.0);

  const double prefactor = std::pow(t, -grid.dim / (2.0 * d));
  double ref_sup = 0.0;
  for (double v : unit.profile.values()) ref_sup = std::max(ref_sup, std::abs(prefactor * v));
  double worst = 0.0;
  for (std::size_t i = 0; i < direct.profile.size(); ++i) {
    const double ref = prefactor * unit.profile[i];
    if (std::abs(ref) <= 1e-6 * ref_sup) continue;
    worst = std::max(worst, std::abs(direct.profile[i] - ref) / std::abs(ref));
  }
  return worst;
}

double kernel_min(double d, const GridSpec& grid) {
  const KernelProfile k = kernel_profile(grid, d);
  const auto v = k.profile.values();
  return *std::min_element(v.begin(), v.end());
}

double kernel_tail_slope(const KernelProfile& k, double r_lo, double r_hi) {
  const GridSpec& g = k.grid;
  const std::size_t n = g.points_per_axis;
  std::size_t stride = 1;
  for (int a = 1; a < g.dim; ++a) stride *= n;
  // Index of the origin along every axis is n/2.
  std::size_t origin = 0;
  for (int a = 0; a < g.dim; ++a) origin = origin * n + n / 2;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = n / 2 + 1; i < n; ++i) {
    const double r = g.coordinate(i);
    if (r < r_lo || r > r_hi) continue;
    const double v = std::abs(k.profile[origin + (i - n / 2) * stride]);
    if (v <= 0.0) continue;
    const double x = std::log(r), y = std::log(v);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++count;
  }
  if (count < 2) throw Error(ErrorCode::InvalidArgument, "tail window holds fewer than two points");
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace fujita
