#include "fujita/spectral.hpp"

#include <cmath>
#include <string>

#include "fujita/error.hpp"
#include "fujita/transform.hpp"

namespace fujita {

void apply_radial_multiplier(Spectrum& s, const std::function<double(double)>& m) {
  const auto classes = radial_classes(s.grid);
  const std::vector<double> xi2 = class_xi2(s.grid, *classes);
  std::vector<double> factor(xi2.size());
  for (std::size_t c = 0; c < xi2.size(); ++c) factor[c] = m(xi2[c]);
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.coeffs[k] *= factor[classes->class_of[k]];
}

Field apply_radial_multiplier(const Field& f, const std::function<double(double)>& m) {
  Spectrum s = f.spectrum();
  apply_radial_multiplier(s, m);
  return inverse(s);
}

Field fractional_laplacian(const Field& f, double d) {
  if (!(d > 0.0)) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  return apply_radial_multiplier(f, [d](double xi2) { return laplacian_symbol(xi2, d); });
}

Field semigroup_apply(const Field& f, double d, double t) {
  if (!(d > 0.0)) throw Error(ErrorCode::InvalidArgument, "d must be positive");
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "t must be nonnegative");
  if (t == 0.0) return f;
  return apply_radial_multiplier(f, [d, t](double xi2) { return std::exp(-t * laplacian_symbol(xi2, d)); });
}

double default_reg_radius(const GridSpec& grid) { return 0.5 * grid.spacing(); }

Field radial_weight(const GridSpec& grid, double alpha, double reg_radius) {
  if (!(reg_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "reg_radius must be positive");
  RealVector v(grid.total_points());
  if (alpha == 0.0) {
    std::fill(v.begin(), v.end(), 1.0);
    return Field(grid, std::move(v));
  }
  const double cap = std::pow(reg_radius, alpha);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = std::sqrt(grid.radius_squared(i));
    v[i] = r < reg_radius ? cap : std::pow(r, alpha);
  }
  return Field(grid, std::move(v));
}

Field weighted_semigroup_apply(const Field& f, double d, double a, double t, double reg_radius) {
  const int N = f.grid().dim;
  if (!(a > 0.0) || !(a < N)) {
    throw Error(ErrorCode::NonLocallyIntegrableWeight,
                "weight exponent must lie in (0, " + std::to_string(N) + ")");
  }
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  return semigroup_apply(multiply(radial_weight(f.grid(), -a, reg_radius), f), d, t);
}

Field weighted_semigroup_apply(const Field& f, double d, double a, double t) {
  return weighted_semigroup_apply(f, d, a, t, default_reg_radius(f.grid()));
}

double spectral_tail_fraction(const Spectrum& s) {
  const GridSpec& g = s.grid;
  const std::size_t n = g.points_per_axis;
  const std::size_t last = n / 2 + 1;
  const long long cutoff = static_cast<long long>(n) / 3;
  double total = 0.0;
  double tail = 0.0;
  for (std::size_t flat = 0; flat < s.coeffs.size(); ++flat) {
    std::size_t rest = flat;
    long long jmax = static_cast<long long>(rest % last);
    rest /= last;
    for (int k = 0; k < g.dim - 1; ++k) {
      const std::size_t i = rest % n;
      rest /= n;
      const long long j = i < n / 2 ? static_cast<long long>(i) : static_cast<long long>(n - i);
      jmax = std::max(jmax, j);
    }
    // Interior half-spectrum coefficients stand for two conjugate modes.
    const std::size_t jl = flat % last;
    const double weight = (jl == 0 || jl == n / 2) ? 1.0 : 2.0;
    const double e = weight * std::norm(s.coeffs[flat]);
    total += e;
    if (jmax > cutoff) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace fujita
