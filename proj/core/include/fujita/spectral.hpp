#pragma once

#include <cmath>
#include <functional>

#include "fujita/field.hpp"

namespace fujita {

// Symbol of (-Delta)^d at squared wavenumber xi2.
inline double laplacian_symbol(double xi2, double d);

// Multiplies every coefficient by m(|xi|^2). All multipliers used here are
// even in xi, so the Nyquist modes need no special treatment.
Field apply_radial_multiplier(const Field& f, const std::function<double(double)>& m);
void apply_radial_multiplier(Spectrum& s, const std::function<double(double)>& m);

Field fractional_laplacian(const Field& f, double d);

// e^{-t(-Delta)^d} f.
Field semigroup_apply(const Field& f, double d, double t);

// Default cap radius for singular weights: half a grid cell.
double default_reg_radius(const GridSpec& grid);

// |x|^alpha, frozen at reg_radius^alpha inside the ball of radius reg_radius.
Field radial_weight(const GridSpec& grid, double alpha, double reg_radius);

// e^{-t(-Delta)^d} (|x|^{-a} f) with the capped weight; a in (0, N).
Field weighted_semigroup_apply(const Field& f, double d, double a, double t, double reg_radius);
Field weighted_semigroup_apply(const Field& f, double d, double a, double t);

// Share of sum |c_k|^2 carried by modes with max_axis |j| > n/3.
double spectral_tail_fraction(const Spectrum& s);

inline double laplacian_symbol(double xi2, double d) {
  if (xi2 == 0.0) return 0.0;
  return d == 1.0 ? xi2 : std::pow(xi2, d);
}

}  // namespace fujita
