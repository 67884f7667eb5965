#pragma once

#include "fujita/field.hpp"

namespace fujita {

// E_d(., t) sampled on the grid, with the origin at index n/2 on every axis.
struct KernelProfile {
  GridSpec grid;
  Field profile;
  double d = 1.0;
  double t = 1.0;
  // exp(-t |xi_Nyquist|^{2d}); above 1e-10 the kernel is under-resolved.
  double nyquist_tail = 0.0;

  bool resolved() const { return nyquist_tail <= 1e-10; }
};

KernelProfile kernel_profile(const GridSpec& grid, double d, double t = 1.0);

// Max relative gap between E_d(., t) and t^{-N/2d} E_d(t^{-1/2d} ., 1) over
// points where the reference exceeds 1e-6 of its sup. The reference profile is
// built on the box of half-width L t^{-1/2d} with the same n, so both sides are
// sampled at the same rescaled points.
double verify_kernel_scaling(double d, double t, const GridSpec& grid);

double kernel_min(double d, const GridSpec& grid);

// Log-log slope of the profile along the first axis over r in [r_lo, r_hi].
double kernel_tail_slope(const KernelProfile& k, double r_lo, double r_hi);

}  // namespace fujita
