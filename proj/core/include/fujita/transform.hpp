#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "fujita/grid.hpp"

namespace fujita {

// Raw transforms on 64-byte aligned buffers. `forward_transform` is
// unnormalized; `inverse_transform` divides by n^N and leaves `in` intact.
void forward_transform(const GridSpec& grid, const double* in, std::complex<double>* out);
void inverse_transform(const GridSpec& grid, const std::complex<double>* in, double* out);

// Spectral modes grouped by integer |j|^2 (|xi|^2 = unit^2 * |j|^2), so that a
// radial multiplier is evaluated once per distinct value.
struct RadialClasses {
  std::vector<double> j2;             // distinct |j|^2, ascending
  std::vector<std::uint32_t> class_of;  // per spectral coefficient
  // Per coefficient: true when the mode has a Nyquist index on some axis.
  std::vector<bool> nyquist;
};

std::shared_ptr<const RadialClasses> radial_classes(const GridSpec& grid);

// Squared wavenumber magnitudes |xi|^2 for each class.
std::vector<double> class_xi2(const GridSpec& grid, const RadialClasses& classes);

}  // namespace fujita
