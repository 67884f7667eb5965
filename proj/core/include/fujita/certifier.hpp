#pragma once

#include <string>
#include <vector>

#include "fujita/model.hpp"

namespace fujita {

// C-infinity transition from 0 (x <= 0) to 1 (x >= 1) built from exp(-1/s).
double smoothstep(double x);
double smoothstep_derivative(double x);

// 0 on [0,1/4] and [4/5, inf), 1 on [1/2, 3/4].
double psi1(double s);
double psi1_derivative(double s);
// 1 on [0,1], 0 on [2, inf).
double psi2(double s);
double psi2_derivative(double s);

// psi1(t/T)^{p/(p-1)} psi2(|x|^{2d}/T)^{2dp/(p-1)}; `radius` is |x|.
double psi_T(double radius, double t, double T, double d, double p);

// Spatial factor psi2(|x|^{2d}/T)^{2dp/(p-1)} on the grid.
Field spatial_cutoff(const GridSpec& grid, double T, double d, double p);

// sup of T |(-Delta)^d phi| / psi2^{2d/(p-1)} over the transition layer
// psi2 in (1e-3, 1 - 1e-3), phi the spatial cutoff. With spatial_cutoff false
// phi is constant and the ratio is 0.
double laplacian_power_bound_check(double T, int d, double p, const GridSpec& grid, bool spatial_cutoff = true);

double nonexistence_exponent(int N, double d, double alpha, double p, double m);

// int w(x) psi2(|x|^{2d}/T)^{2dp/(p-1)} dx as a cell sum.
double wbar_integral(const Field& w, double T, double d, double p);

// int_lo^hi psi1(s)^{p/(p-1)} ds.
double psi1_power_integral(double lo, double hi, double p);

enum class Verdict { InequalityHolds, InequalityViolated, Indeterminate };
std::string to_string(Verdict v);

struct CertificateReport {
  double T = 0.0;
  double lhs_nonlinear = 0.0;  // int int |x|^alpha |u|^p psi_T
  double forcing_term = 0.0;   // int int zeta w psi_T
  double I1 = 0.0;             // int int |u| |(-Delta)^d psi_T|
  double I2 = 0.0;             // int int |u| |d_t psi_T|
  // Young remainders: I1 <= lhs/2 + I11 and I2 <= lhs/2 + I21.
  double I11 = 0.0;
  double I21 = 0.0;
  double theta = 0.0;
  Verdict verdict = Verdict::Indeterminate;
};

// Time integrals use the trapezoid rule over `times`, space integrals cell
// sums. The mesh must reach below T/4 and beyond 4T/5 (the support of psi1).
// Non-integer d needs allow_fractional and always yields Indeterminate.
CertificateReport certificate(const std::vector<double>& times, const std::vector<Field>& u,
                              const ModelParams& params, double T, bool allow_fractional = false);

// Both sides of the weak formulation tested against psi_T, with a general
// space-time source f in place of zeta w:
//   lhs = int int u (-d_t psi_T + (-Delta)^d psi_T)
//   rhs = int u0 psi_T(.,0) + int int |x|^alpha |u|^p psi_T + int int f psi_T
struct WeakPairing {
  double lhs = 0.0;
  double rhs = 0.0;
};
WeakPairing weak_pairing(const std::vector<double>& times, const std::vector<Field>& u,
                         const std::vector<Field>& source, const ModelParams& params, double T);

}  // namespace fujita
