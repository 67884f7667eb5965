#pragma once

#include <optional>

namespace fujita {

// Window of admissible 1/r values (open interval; empty when lower >= upper).
struct RWindow {
  double lower = 0.0;
  double upper = 0.0;
  bool empty() const { return !(lower < upper); }
};

struct ExponentSet {
  double p_c = 0.0;
  double p_F_sigma = 0.0;  // may be +inf
  double p_F_m = 0.0;      // may be +inf
  double ell = 0.0;
  RWindow r_window;
  std::optional<double> r;   // midpoint choice, present iff the window is nonempty
  std::optional<double> mu;
};

// (N - 2ds + alpha) / (N - 2ds - 2d), +inf when the denominator is <= 0.
double fujita_exponent_formula(int N, double d, double alpha, double s);

// Critical exponent for a forcing exponent s: the formula for s <= 0 and +inf
// for s > 0, where blow-up holds for every p > 1.
double fujita_exponent(int N, double d, double alpha, double s);

double critical_lebesgue_exponent(int N, double d, double alpha, double p);

double mu_for_r(int N, double d, double p_c, double r);

ExponentSet exponents(int N, double d, double alpha, double sigma, double m, double p);

}  // namespace fujita
