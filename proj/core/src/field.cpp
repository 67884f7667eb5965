#include "fujita/field.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "fujita/error.hpp"
#include "fujita/transform.hpp"

namespace fujita {

struct Field::Cache {
  std::once_flag once;
  Spectrum spectrum;
};

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw Error(ErrorCode::GridMismatch, "fields live on different grids");
}

Field::Field(const GridSpec& grid, RealVector values)
    : grid_(grid),
      values_(std::make_shared<const RealVector>(std::move(values))),
      cache_(std::make_shared<Cache>()) {
  if (values_->size() != grid_.total_points()) {
    throw Error(ErrorCode::InvalidArgument, "value count does not match the grid");
  }
}

Field Field::zeros(const GridSpec& grid) { return Field(grid, RealVector(grid.total_points(), 0.0)); }

Field Field::constant(const GridSpec& grid, double value) {
  return Field(grid, RealVector(grid.total_points(), value));
}

Field Field::from_function(const GridSpec& grid,
                           const std::function<double(std::span<const double>)>& f) {
  RealVector v(grid.total_points());
  double x[3] = {0.0, 0.0, 0.0};
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    const auto idx = unravel(grid, flat);
    for (int k = 0; k < grid.dim; ++k) x[k] = grid.coordinate(idx[static_cast<std::size_t>(k)]);
    v[flat] = f(std::span<const double>(x, static_cast<std::size_t>(grid.dim)));
  }
  return Field(grid, std::move(v));
}

bool Field::is_finite() const {
  for (double v : *values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double Field::sup_abs() const {
  double m = 0.0;
  for (double v : *values_) {
    const double a = std::abs(v);
    if (!(a <= m)) m = a;  // lets NaN through
  }
  return m;
}

double Field::mean() const {
  double s = 0.0;
  for (double v : *values_) s += v;
  return s / static_cast<double>(values_->size());
}

double Field::integral() const {
  double s = 0.0;
  for (double v : *values_) s += v;
  return s * grid_.cell_measure();
}

const Spectrum& Field::spectrum() const {
  std::call_once(cache_->once, [this] {
    cache_->spectrum.grid = grid_;
    cache_->spectrum.coeffs.resize(grid_.spectral_size());
    forward_transform(grid_, values_->data(), cache_->spectrum.coeffs.data());
  });
  return cache_->spectrum;
}

Spectrum forward(const Field& f) { return f.spectrum(); }

Field inverse(const Spectrum& s) {
  RealVector v(s.grid.total_points());
  inverse_transform(s.grid, s.coeffs.data(), v.data());
  return Field(s.grid, std::move(v));
}

namespace {

template <class Op>
Field combine(const Field& a, const Field& b, Op op) {
  require_same_grid(a.grid(), b.grid());
  RealVector v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(a[i], b[i]);
  return Field(a.grid(), std::move(v));
}

}  // namespace

Field operator+(const Field& a, const Field& b) {
  return combine(a, b, [](double x, double y) { return x + y; });
}

Field operator-(const Field& a, const Field& b) {
  return combine(a, b, [](double x, double y) { return x - y; });
}

Field multiply(const Field& a, const Field& b) {
  return combine(a, b, [](double x, double y) { return x * y; });
}

Field operator*(double c, const Field& f) {
  RealVector v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f[i];
  return Field(f.grid(), std::move(v));
}

}  // namespace fujita
