#include "fujita/exponents.hpp"

#include <algorithm>
#include <limits>

#include "fujita/error.hpp"

namespace fujita {

double fujita_exponent_formula(int N, double d, double alpha, double s) {
  const double den = N - 2.0 * d * s - 2.0 * d;
  if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
  return (N - 2.0 * d * s + alpha) / den;
}

double fujita_exponent(int N, double d, double alpha, double s) {
  if (s > 0.0) return std::numeric_limits<double>::infinity();
  return fujita_exponent_formula(N, d, alpha, s);
}

double critical_lebesgue_exponent(int N, double d, double alpha, double p) {
  return N * (p - 1.0) / (2.0 * d + alpha);
}

double mu_for_r(int N, double d, double p_c, double r) {
  return N / (2.0 * d) * (1.0 / p_c - 1.0 / r);
}

ExponentSet exponents(int N, double d, double alpha, double sigma, double m, double p) {
  if (!(2.0 * d + alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "exponents need 2d + alpha > 0");
  if (!(p > 1.0)) throw Error(ErrorCode::InvalidArgument, "exponents need p > 1");
  if (!(d > 0.0) || N < 1) throw Error(ErrorCode::InvalidArgument, "exponents need d > 0 and N >= 1");

  ExponentSet e;
  e.p_c = critical_lebesgue_exponent(N, d, alpha, p);
  e.p_F_sigma = fujita_exponent(N, d, alpha, sigma);
  e.p_F_m = fujita_exponent(N, d, alpha, m);
  e.ell = N * e.p_c / (N + 2.0 * (sigma + 1.0) * d * e.p_c);

  const double lower = std::max({0.0, (alpha * p + 2.0 * d) / (N * p * (p - 1.0)),
                                 1.0 / e.p_c + 2.0 * d * sigma / N});
  const double upper = std::min({1.0 / e.p_c, (N + alpha) / (N * p), 1.0 / p});
  e.r_window = RWindow{lower, upper};
  if (!e.r_window.empty()) {
    e.r = 2.0 / (lower + upper);
    e.mu = mu_for_r(N, d, e.p_c, *e.r);
  }
  return e;
}

}  // namespace fujita
