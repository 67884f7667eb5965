#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace fujita {

// Default cap on n^N; one Field of this size is 512 MiB.
inline constexpr std::size_t kDefaultPointBudget = std::size_t{1} << 26;

// Periodic box [-L, L)^N sampled with n points per axis.
struct GridSpec {
  int dim = 1;
  double half_width = 1.0;
  std::size_t points_per_axis = 8;

  double spacing() const { return 2.0 * half_width / static_cast<double>(points_per_axis); }
  double cell_measure() const;
  std::size_t total_points() const;
  // Number of complex coefficients in the real-to-complex layout.
  std::size_t spectral_size() const;
  // Wavenumber of integer index j is j * wavenumber_unit().
  double wavenumber_unit() const;
  double coordinate(std::size_t i) const {
    return -half_width + static_cast<double>(i) * spacing();
  }
  // Squared distance to the origin of the flat point index.
  double radius_squared(std::size_t flat) const;

  bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(int dim, double half_width, std::size_t points_per_axis,
                   std::size_t point_budget = kDefaultPointBudget);

// Unravels a flat row-major index into per-axis indices.
std::array<std::size_t, 3> unravel(const GridSpec& grid, std::size_t flat);

}  // namespace fujita
