#pragma once

#include <span>
#include <vector>

#include "fujita/field.hpp"

namespace fujita {

// Decreasing rearrangement of |f| with every grid cell an atom of measure
// cell_measure: f*(lambda) = thresholds[k] on [k c, (k+1) c).
struct Rearrangement {
  std::vector<double> thresholds;
  double cell_measure = 1.0;

  double total_measure() const { return cell_measure * static_cast<double>(thresholds.size()); }
  double at(double lambda) const;
  // Integral of f* over [0, inf).
  double integral() const;
};

Rearrangement rearrangement(const Field& f);
Rearrangement rearrangement(std::span<const double> samples, double cell_measure);

// L^{p,q} norm built on f**(t) = (1/t) int_0^t f*. q may be infinity.
double lorentz_norm(const Rearrangement& r, double p, double q);
double lorentz_norm(const Field& f, double p, double q);

double weak_norm(const Rearrangement& r, double p);
double weak_norm(const Field& f, double p);

// Grid L^p norm (p may be infinity).
double lebesgue_norm(const Field& f, double p);

// sup (1+|x|)^{alpha/(p-1)} |f(x)|, alpha > 0.
double lambda_norm(const Field& f, double alpha, double p);

double beta_function(double a, double b);

}  // namespace fujita
