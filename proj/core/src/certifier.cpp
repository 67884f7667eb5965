#include "fujita/certifier.hpp"

#include <cmath>

#include "fujita/error.hpp"
#include "fujita/quadrature.hpp"
#include "fujita/spectral.hpp"

namespace fujita {
namespace {

double bump(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
double bump_derivative(double s) { return s > 0.0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }

bool is_integer(double d) { return d == std::round(d); }

void require_support_inside(const GridSpec& g, double T, double d) {
  const double radius = std::pow(2.0 * T, 1.0 / (2.0 * d));
  if (!(radius < g.half_width)) {
    throw Error(ErrorCode::SupportClipped, "cutoff radius " + std::to_string(radius) +
                                               " does not fit in half-width " + std::to_string(g.half_width));
  }
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& g) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) s += 0.5 * (t[i + 1] - t[i]) * (g[i] + g[i + 1]);
  return s;
}

}  // namespace

double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = bump(x), b = bump(1.0 - x);
  return a / (a + b);
}

double smoothstep_derivative(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = bump(x), b = bump(1.0 - x);
  const double da = bump_derivative(x), db = bump_derivative(1.0 - x);
  return (da * b + a * db) / ((a + b) * (a + b));
}

double psi1(double s) {
  if (s <= 0.25 || s >= 0.8) return 0.0;
  if (s < 0.5) return smoothstep((s - 0.25) / 0.25);
  if (s <= 0.75) return 1.0;
  return smoothstep((0.8 - s) / 0.05);
}

double psi1_derivative(double s) {
  if (s <= 0.25 || s >= 0.8) return 0.0;
  if (s < 0.5) return smoothstep_derivative((s - 0.25) / 0.25) / 0.25;
  if (s <= 0.75) return 0.0;
  return -smoothstep_derivative((0.8 - s) / 0.05) / 0.05;
}

double psi2(double s) {
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  return smoothstep(2.0 - s);
}

double psi2_derivative(double s) {
  if (s <= 1.0 || s >= 2.0) return 0.0;
  return -smoothstep_derivative(2.0 - s);
}

double psi_T(double radius, double t, double T, double d, double p) {
  const double a = psi1(t / T);
  if (a == 0.0) return 0.0;
  const double b = psi2(std::pow(radius, 2.0 * d) / T);
  if (b == 0.0) return 0.0;
  return std::pow(a, p / (p - 1.0)) * std::pow(b, 2.0 * d * p / (p - 1.0));
}

Field spatial_cutoff(const GridSpec& grid, double T, double d, double p) {
  const double e = 2.0 * d * p / (p - 1.0);
  RealVector v(grid.total_points());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double s = std::pow(grid.radius_squared(i), d) / T;
    v[i] = std::pow(psi2(s), e);
  }
  return Field(grid, std::move(v));
}

double laplacian_power_bound_check(double T, int d, double p, const GridSpec& grid, bool spatial_cutoff_on) {
  if (d != 1 && d != 2) throw Error(ErrorCode::InvalidArgument, "bound check supports d = 1, 2");
  if (!(T > 0.0) || !(p > 1.0)) throw Error(ErrorCode::InvalidArgument, "bound check needs T > 0, p > 1");
  if (!spatial_cutoff_on) {
    const Field flat = Field::constant(grid, 1.0);
    return T * fractional_laplacian(flat, d).sup_abs();
  }
  require_support_inside(grid, T, d);
  const double inner = std::pow(T, 1.0 / (2.0 * d));
  const double outer = std::pow(2.0 * T, 1.0 / (2.0 * d));
  if ((outer - inner) / grid.spacing() < 16.0) {
    throw Error(ErrorCode::ResolutionError, "cutoff transition layer spans fewer than 16 cells");
  }
  const Field phi = spatial_cutoff(grid, T, d, p);
  const Field lap = fractional_laplacian(phi, d);
  const double e = 2.0 * d / (p - 1.0);
  double best = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double b = psi2(std::pow(grid.radius_squared(i), d) / T);
    if (!(b > 1e-3 && b < 1.0 - 1e-3)) continue;
    best = std::max(best, T * std::abs(lap[i]) / std::pow(b, e));
  }
  return best;
}

double nonexistence_exponent(int N, double d, double alpha, double p, double m) {
  if (!(p > 1.0)) throw Error(ErrorCode::InvalidArgument, "theta needs p > 1");
  return -alpha / (2.0 * d * (p - 1.0)) + N / (2.0 * d) - p / (p - 1.0) - m;
}

double wbar_integral(const Field& w, double T, double d, double p) {
  require_support_inside(w.grid(), T, d);
  const Field phi = spatial_cutoff(w.grid(), T, d, p);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * phi[i];
  return s * w.grid().cell_measure();
}

double psi1_power_integral(double lo, double hi, double p) {
  const double e = p / (p - 1.0);
  // Split at the gluing points so every piece is smooth.
  const double cuts[] = {0.25, 0.5, 0.75, 0.8};
  double total = 0.0;
  double a = lo;
  for (double c : cuts) {
    if (c <= a) continue;
    const double b = std::min(c, hi);
    if (b > a) total += adaptive_gauss_legendre([e](double s) { return std::pow(psi1(s), e); }, a, b, 1e-13);
    a = b;
    if (a >= hi) break;
  }
  if (hi > a) total += adaptive_gauss_legendre([e](double s) { return std::pow(psi1(s), e); }, a, hi, 1e-13);
  return total;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::InequalityHolds: return "InequalityHolds";
    case Verdict::InequalityViolated: return "InequalityViolated";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

CertificateReport certificate(const std::vector<double>& times, const std::vector<Field>& u,
                              const ModelParams& params, double T, bool allow_fractional) {
  validate(params);
  if (!(T > 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  if (times.size() != u.size() || times.size() < 2) {
    throw Error(ErrorCode::TrajectoryTooShort, "trajectory needs at least two samples and one field per time");
  }
  if (times.front() > 0.25 * T || times.back() < 0.8 * T) {
    throw Error(ErrorCode::TrajectoryTooShort, "trajectory must cover [T/4, 4T/5]");
  }
  const bool fractional = !is_integer(params.d);
  if (fractional && !allow_fractional) {
    throw Error(ErrorCode::InvalidArgument, "certificate needs integer d unless fractional evaluation is allowed");
  }
  const GridSpec& g = params.grid;
  require_support_inside(g, T, params.d);

  const double p = params.p;
  const double pe = p / (p - 1.0);
  const Field phi = spatial_cutoff(g, T, params.d, p);
  const Field lap = fractional_laplacian(phi, params.d);
  const Field weight = radial_weight(g, params.alpha, params.reg_radius);
  const Field dual_weight = radial_weight(g, -params.alpha / (p - 1.0), params.reg_radius);
  const double cell = g.cell_measure();
  const double c_eps = std::pow(0.5 * p, -1.0 / (p - 1.0)) * (p - 1.0) / p;

  double wphi = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) wphi += params.w[i] * phi[i];
  wphi *= cell;

  const std::size_t K = times.size();
  std::vector<double> lhs(K, 0.0), forc(K, 0.0), i1(K, 0.0), i2(K, 0.0), i11(K, 0.0), i21(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    require_same_grid(u[k].grid(), g);
    const double s = times[k] / T;
    const double a1 = psi1(s);
    if (a1 == 0.0) continue;
    const double a = std::pow(a1, pe);
    const double b = pe * std::pow(a1, pe - 1.0) * psi1_derivative(s) / T;

    double sum_nl = 0, sum_lap = 0, sum_dt = 0, young_lap = 0, young_dt = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const double ui = std::abs(u[k][i]);
      const double ph = phi[i];
      sum_nl += weight[i] * std::pow(ui, p) * ph;
      sum_lap += ui * std::abs(lap[i]);
      sum_dt += ui * ph;
      if (ph > 0.0) {
        // psi^{-1/(p-1)} |D psi|^{p'} |x|^{-alpha/(p-1)} with psi = a phi.
        const double inv = std::pow(a * ph, -1.0 / (p - 1.0)) * dual_weight[i];
        young_lap += std::pow(a * std::abs(lap[i]), pe) * inv;
        young_dt += std::pow(std::abs(b) * ph, pe) * inv;
      }
    }
    lhs[k] = a * sum_nl * cell;
    forc[k] = a * zeta(params.forcing, times[k]) * wphi;
    i1[k] = a * sum_lap * cell;
    i2[k] = std::abs(b) * sum_dt * cell;
    i11[k] = c_eps * young_lap * cell;
    i21[k] = c_eps * young_dt * cell;
  }

  CertificateReport r;
  r.T = T;
  r.lhs_nonlinear = trapezoid(times, lhs);
  r.forcing_term = trapezoid(times, forc);
  r.I1 = trapezoid(times, i1);
  r.I2 = trapezoid(times, i2);
  r.I11 = trapezoid(times, i11);
  r.I21 = trapezoid(times, i21);
  r.theta = nonexistence_exponent(g.dim, params.d, params.alpha, p, large_time_exponent(params.forcing));
  if (fractional) {
    r.verdict = Verdict::Indeterminate;
  } else {
    r.verdict = r.lhs_nonlinear + r.forcing_term > (r.I1 + r.I2) * (1.0 + 1e-6) ? Verdict::InequalityViolated
                                                                                 : Verdict::InequalityHolds;
  }
  return r;
}

WeakPairing weak_pairing(const std::vector<double>& times, const std::vector<Field>& u,
                         const std::vector<Field>& source, const ModelParams& params, double T) {
  if (times.size() != u.size() || times.size() != source.size() || times.size() < 2) {
    throw Error(ErrorCode::TrajectoryTooShort, "pairing needs matching times, fields and sources");
  }
  const GridSpec& g = params.grid;
  require_support_inside(g, T, params.d);
  const double p = params.p;
  const double pe = p / (p - 1.0);
  const Field phi = spatial_cutoff(g, T, params.d, p);
  const Field lap = fractional_laplacian(phi, params.d);
  const Field weight = radial_weight(g, params.alpha, params.reg_radius);
  const double cell = g.cell_measure();

  const std::size_t K = times.size();
  std::vector<double> left(K), right(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double s = times[k] / T;
    const double a1 = psi1(s);
    const double a = std::pow(a1, pe);
    const double b = a1 > 0.0 ? pe * std::pow(a1, pe - 1.0) * psi1_derivative(s) / T : 0.0;
    double l = 0.0, rr = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const double v = u[k][i];
      l += v * (-b * phi[i] + a * lap[i]);
      rr += (weight[i] * std::pow(std::abs(v), p) + source[k][i]) * a * phi[i];
    }
    left[k] = l * cell;
    right[k] = rr * cell;
  }
  // psi_T(., 0) = 0 because psi1 vanishes near 0, so the u0 term drops out.
  double initial = 0.0;
  const double a0 = std::pow(psi1(times.front() / T), pe);
  if (times.front() == 0.0 && a0 != 0.0) {
    for (std::size_t i = 0; i < phi.size(); ++i) initial += params.u0[i] * a0 * phi[i];
    initial *= cell;
  }
  return WeakPairing{trapezoid(times, left), initial + trapezoid(times, right)};
}

}  // namespace fujita
