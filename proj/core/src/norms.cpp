#include "fujita/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "fujita/error.hpp"
#include "fujita/quadrature.hpp"

namespace fujita {
namespace {

// b^s - a^s for 0 < a < b without cancellation; s = 0 means log(b/a).
double pow_diff(double a, double b, double s) {
  const double rel = std::log1p((b - a) / a);
  if (s == 0.0) return rel;
  return std::pow(a, s) * std::expm1(s * rel);
}

// int_a^b t^e dt.
double power_integral(double a, double b, double e) {
  if (e == -1.0) return pow_diff(a, b, 0.0);
  return pow_diff(a, b, e + 1.0) / (e + 1.0);
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// int_a^b t^{q/p - 1} (A + B/t)^q dt.
double piece_integral(double A, double B, double a, double b, double p, double q) {
  const double base = q / p - 1.0;
  const double qi = std::round(q);
  if (qi == q && q <= 8.0) {
    const int n = static_cast<int>(qi);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      if (B == 0.0 && k > 0) break;
      sum += binomial(n, k) * std::pow(A, n - k) * std::pow(B, k) * power_integral(a, b, base - k);
    }
    return sum;
  }
  auto integrand = [&](double t) { return std::pow(t, base) * std::pow(A + B / t, q); };
  return adaptive_gauss_legendre(integrand, a, b, 1e-9);
}

}  // namespace

double Rearrangement::at(double lambda) const {
  if (lambda < 0.0) throw Error(ErrorCode::InvalidArgument, "lambda must be nonnegative");
  const auto k = static_cast<std::size_t>(std::floor(lambda / cell_measure));
  return k < thresholds.size() ? thresholds[k] : 0.0;
}

double Rearrangement::integral() const {
  double s = 0.0;
  for (double v : thresholds) s += v;
  return s * cell_measure;
}

Rearrangement rearrangement(std::span<const double> samples, double cell_measure) {
  Rearrangement r;
  r.cell_measure = cell_measure;
  r.thresholds.resize(samples.size());
  std::transform(samples.begin(), samples.end(), r.thresholds.begin(),
                 [](double v) { return std::abs(v); });
  std::sort(r.thresholds.begin(), r.thresholds.end(), std::greater<>());
  return r;
}

Rearrangement rearrangement(const Field& f) {
  return rearrangement(f.values(), f.grid().cell_measure());
}

double lorentz_norm(const Rearrangement& r, double p, double q) {
  if (!(p > 1.0) || std::isinf(p)) throw Error(ErrorCode::InvalidArgument, "Lorentz norm needs 1 < p < inf");
  if (!(q >= 1.0)) throw Error(ErrorCode::InvalidArgument, "Lorentz norm needs q >= 1");
  const double c = r.cell_measure;
  const auto& v = r.thresholds;
  const std::size_t M = v.size();

  if (std::isinf(q)) {
    // On each step t^{1/p} f** has an interior minimum only, so the sup sits
    // at a breakpoint k c where f** = S_k / (k c).
    double best = 0.0;
    double partial = 0.0;
    for (std::size_t k = 1; k <= M; ++k) {
      partial += v[k - 1];
      const double tk = static_cast<double>(k) * c;
      best = std::max(best, std::pow(tk, 1.0 / p - 1.0) * partial * c);
    }
    return best;
  }

  if (M == 0 || v.front() == 0.0) return 0.0;
  double total = std::pow(v[0], q) * (p / q) * std::pow(c, q / p);
  double partial = v[0] * c;  // int_0^{t_{k-1}} f*
  for (std::size_t k = 2; k <= M; ++k) {
    const double A = v[k - 1];
    if (A == 0.0) break;
    const double a = static_cast<double>(k - 1) * c;
    const double B = partial - A * a;
    total += piece_integral(A, B, a, a + c, p, q);
    partial += A * c;
  }
  // f* vanishes from the first zero threshold on; f** = S / t there.
  std::size_t support = M;
  while (support > 0 && v[support - 1] == 0.0) --support;
  const double tail_start = static_cast<double>(support) * c;
  total += std::pow(partial, q) * std::pow(tail_start, q / p - q) / (q - q / p);
  return std::pow(total, 1.0 / q);
}

double lorentz_norm(const Field& f, double p, double q) { return lorentz_norm(rearrangement(f), p, q); }

double weak_norm(const Rearrangement& r, double p) {
  return lorentz_norm(r, p, std::numeric_limits<double>::infinity());
}

double weak_norm(const Field& f, double p) { return weak_norm(rearrangement(f), p); }

double lebesgue_norm(const Field& f, double p) {
  if (std::isinf(p)) return f.sup_abs();
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidArgument, "Lebesgue norm needs p >= 1");
  double s = 0.0;
  for (double v : f.values()) s += std::pow(std::abs(v), p);
  return std::pow(s * f.grid().cell_measure(), 1.0 / p);
}

double lambda_norm(const Field& f, double alpha, double p) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda_norm needs alpha > 0");
  if (!(p > 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda_norm needs p > 1");
  const double e = alpha / (p - 1.0);
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double r = std::sqrt(f.grid().radius_squared(i));
    best = std::max(best, std::pow(1.0 + r, e) * std::abs(f[i]));
  }
  return best;
}

double beta_function(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorCode::InvalidArgument, "beta needs positive arguments");
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

}  // namespace fujita
