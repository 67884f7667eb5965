#pragma once

#include <functional>
#include <memory>
#include <span>

#include "fujita/aligned.hpp"
#include "fujita/grid.hpp"

namespace fujita {

// Real-to-complex coefficients: the last axis keeps indices 0..n/2, the other
// axes use the standard FFT order (0..n/2-1, then -n/2..-1). Forward transform
// is unnormalized; inverse divides by n^N.
struct Spectrum {
  GridSpec grid;
  ComplexVector coeffs;
};

class Field {
 public:
  Field(const GridSpec& grid, RealVector values);

  static Field zeros(const GridSpec& grid);
  static Field constant(const GridSpec& grid, double value);
  // f receives the coordinates of a point (length grid.dim).
  static Field from_function(const GridSpec& grid,
                             const std::function<double(std::span<const double>)>& f);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> values() const { return *values_; }
  double operator[](std::size_t i) const { return (*values_)[i]; }
  std::size_t size() const { return values_->size(); }

  // False once any sample is NaN or infinite.
  bool is_finite() const;
  double sup_abs() const;
  double mean() const;
  double integral() const;

  // Computed on first use and shared by copies of this Field.
  const Spectrum& spectrum() const;

 private:
  struct Cache;
  GridSpec grid_;
  std::shared_ptr<const RealVector> values_;
  std::shared_ptr<Cache> cache_;
};

Spectrum forward(const Field& f);
Field inverse(const Spectrum& s);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double c, const Field& f);
// Pointwise product.
Field multiply(const Field& a, const Field& b);

void require_same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace fujita
