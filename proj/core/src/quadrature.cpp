#include "fujita/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>

#include "fujita/error.hpp"

namespace fujita {

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw Error(ErrorCode::InvalidArgument, "Jacobi exponents must exceed -1");

  // Three-term recurrence of the monic Jacobi polynomials.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n > 1 ? n - 1 : 1);
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
    const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    off(k - 1) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off.head(n - 1));
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex m;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_jacobi(n, 0.0, 0.0)).first;
  return it->second;
}

EndpointRule left_singular_rule(int n, double sigma, double len) {
  // s = len (1 + x) / 2 maps the Jacobi weight (1 + x)^sigma onto s^sigma.
  const GaussRule base = gauss_jacobi(n, 0.0, sigma);
  const double scale = std::pow(0.5 * len, sigma + 1.0);
  EndpointRule rule;
  rule.nodes.resize(base.nodes.size());
  rule.weights.resize(base.nodes.size());
  for (std::size_t i = 0; i < base.nodes.size(); ++i) {
    rule.nodes[i] = 0.5 * len * (1.0 + base.nodes[i]);
    rule.weights[i] = scale * base.weights[i];
  }
  return rule;
}

namespace {

double fixed_rule(const GaussRule& rule, const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double rel_tol, int depth,
             const GaussRule& lo, const GaussRule& hi) {
  const double coarse = fixed_rule(lo, f, a, b);
  const double fine = fixed_rule(hi, f, a, b);
  if (std::abs(fine - coarse) <= rel_tol * std::abs(fine) || depth <= 0) return fine;
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, rel_tol, depth - 1, lo, hi) + adapt(f, mid, b, rel_tol, depth - 1, lo, hi);
}

}  // namespace

double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double rel_tol, int max_depth) {
  return adapt(f, a, b, rel_tol, max_depth, gauss_legendre(8), gauss_legendre(16));
}

}  // namespace fujita
