#include "fujita/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fujita/error.hpp"

namespace fujita {

double GridSpec::cell_measure() const { return std::pow(spacing(), dim); }

std::size_t GridSpec::total_points() const {
  std::size_t total = 1;
  for (int k = 0; k < dim; ++k) total *= points_per_axis;
  return total;
}

std::size_t GridSpec::spectral_size() const {
  return total_points() / points_per_axis * (points_per_axis / 2 + 1);
}

double GridSpec::wavenumber_unit() const { return std::numbers::pi / half_width; }

double GridSpec::radius_squared(std::size_t flat) const {
  double r2 = 0.0;
  for (int k = dim - 1; k >= 0; --k) {
    const double x = coordinate(flat % points_per_axis);
    r2 += x * x;
    flat /= points_per_axis;
  }
  return r2;
}

GridSpec make_grid(int dim, double half_width, std::size_t points_per_axis,
                   std::size_t point_budget) {
  if (dim < 1 || dim > 3) {
    throw Error(ErrorCode::InvalidGrid, "dim must be 1, 2 or 3, got " + std::to_string(dim));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(ErrorCode::InvalidGrid, "half_width must be positive and finite");
  }
  if (points_per_axis % 2 != 0) {
    throw Error(ErrorCode::OddResolution,
                "points_per_axis must be even, got " + std::to_string(points_per_axis));
  }
  if (points_per_axis < 8) {
    throw Error(ErrorCode::InvalidGrid, "points_per_axis must be at least 8");
  }
  GridSpec grid{dim, half_width, points_per_axis};
  double total = 1.0;
  for (int k = 0; k < dim; ++k) total *= static_cast<double>(points_per_axis);
  if (total > static_cast<double>(point_budget)) {
    throw Error(ErrorCode::InvalidGrid, "grid exceeds the point budget");
  }
  return grid;
}

std::array<std::size_t, 3> unravel(const GridSpec& grid, std::size_t flat) {
  std::array<std::size_t, 3> idx{0, 0, 0};
  for (int k = grid.dim - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = flat % grid.points_per_axis;
    flat /= grid.points_per_axis;
  }
  return idx;
}

}  // namespace fujita
