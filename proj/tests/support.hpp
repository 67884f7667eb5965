#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fujita/field.hpp"

namespace fujita::testing {

inline Field random_field(const GridSpec& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  RealVector v(grid.total_points());
  for (auto& x : v) x = dist(rng);
  return Field(grid, std::move(v));
}

inline double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// max |a - b| / max |b|
inline double rel_sup_diff(const Field& a, const Field& b) {
  const double s = b.sup_abs();
  return s > 0.0 ? max_abs_diff(a, b) / s : max_abs_diff(a, b);
}

// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline Field gaussian(const GridSpec& grid, double amplitude, double width) {
  return Field::from_function(grid, [=](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    return amplitude * std::exp(-r2 / (width * width));
  });
}

}  // namespace fujita::testing
