#pragma once

#include <functional>
#include <vector>

namespace fujita {

// Nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Weight (1 - x)^a (1 + x)^b, a, b > -1. Built with the Golub-Welsch method.
GaussRule gauss_jacobi(int n, double a, double b);
const GaussRule& gauss_legendre(int n);

// Rule for int_0^len s^sigma g(s) ds = sum w_i g(s_i).
struct EndpointRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
EndpointRule left_singular_rule(int n, double sigma, double len);

// Bisects until 8- and 16-point Gauss-Legendre agree to rel_tol.
double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double rel_tol, int max_depth = 40);

}  // namespace fujita
