#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fujita/exponents.hpp"

using namespace fujita;

namespace {

struct Point {
  int N;
  double d, alpha, sigma, p;
};

// Admissible parameters: alpha >= 0 or 0 < -alpha < min(2d, N), sigma in (-1, 1).
std::vector<Point> sweep(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pts;
  while (pts.size() < count) {
    Point pt;
    pt.N = 1 + static_cast<int>(rng() % 3);
    pt.d = 0.1 + 1.9 * u(rng);
    pt.alpha = u(rng) < 0.5 ? 2.0 * u(rng) : -std::min(2 * pt.d, double(pt.N)) * (0.05 + 0.9 * u(rng));
    pt.sigma = -0.95 + 1.9 * u(rng);
    pt.p = 1.01 + 5.0 * u(rng);
    // Every fifth point sits exactly at the critical exponent when it is finite.
    const double pf = fujita_exponent_formula(pt.N, pt.d, pt.alpha, pt.sigma);
    if (pts.size() % 5 == 0 && std::isfinite(pf) && pf > 1.0) pt.p = pf;
    pts.push_back(pt);
  }
  return pts;
}

}  // namespace

TEST_CASE("hand-checked exponent sets") {
  const ExponentSet a = exponents(3, 1.0, 0.0, -0.5, -0.5, 2.0);
  CHECK(a.p_c == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(a.p_F_sigma == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(a.ell == doctest::Approx(1.0).epsilon(1e-15));

  const ExponentSet b = exponents(3, 1.0, -1.0, -0.5, -0.5, 2.0);
  CHECK(b.p_c == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(b.p_F_sigma == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(b.ell == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(b.r_window.lower == doctest::Approx(0.0));
  CHECK(b.r_window.upper == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  const double r = 6.0, N = 3, d = 1, alpha = -1, p = 2, sigma = -0.5;
  const double mu = mu_for_r(3, d, b.p_c, r);
  CHECK(mu == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::abs(mu - (N * (p - 1) / (2 * r * d) - alpha / (2 * d) + p * mu - 1)) <= 1e-15);
  CHECK(std::abs(mu - ((N / (2 * d)) * (1 / b.ell - 1 / r) - sigma - 1)) <= 1e-15);

  CHECK(std::isinf(exponents(1, 1.0, 0.0, 0.0, 0.0, 2.0).p_F_sigma));
}

TEST_CASE("p_F follows the formula for sigma <= 0 and is infinite for sigma > 0") {
  CHECK(fujita_exponent(3, 1.0, 0.0, 0.0) == doctest::Approx(3.0));
  CHECK(fujita_exponent_formula(3, 1.0, 0.0, 0.25) == doctest::Approx(2.5 / 0.5));
  CHECK(std::isinf(fujita_exponent(3, 1.0, 0.0, 0.25)));
  CHECK(std::isinf(exponents(3, 1.0, 0.0, -0.5, 0.25, 2.0).p_F_m));
  CHECK(std::isinf(fujita_exponent_formula(2, 1.0, 0.0, 0.0)));
}

TEST_CASE("critical Lebesgue exponent") {
  CHECK(critical_lebesgue_exponent(1, 0.25, 0.0, 1.2) == doctest::Approx(0.4));
  CHECK(critical_lebesgue_exponent(2, 0.5, 1.0, 3.0) == doctest::Approx(2.0));
}

TEST_CASE("exponent sweep: mu identities, ell criterion, window") {
  std::size_t windows = 0, at_critical = 0;
  for (const Point& pt : sweep(1000, 42)) {
    const ExponentSet e = exponents(pt.N, pt.d, pt.alpha, pt.sigma, pt.sigma, pt.p);
    const double N = pt.N, d = pt.d, alpha = pt.alpha, p = pt.p, sigma = pt.sigma;
    CHECK(e.p_c == doctest::Approx(N * (p - 1) / (2 * d + alpha)).epsilon(1e-14));
    CHECK(e.ell == doctest::Approx(N * e.p_c / (N + 2 * (sigma + 1) * d * e.p_c)).epsilon(1e-14));

    const double pf = fujita_exponent_formula(pt.N, d, alpha, sigma);
    CHECK(e.p_F_sigma == (sigma > 0 ? INFINITY : pf));
    if (p == pf) {
      ++at_critical;
      CHECK(std::abs(e.ell - 1.0) <= 1e-12);
    } else {
      CHECK((e.ell >= 1.0) == (p >= pf));
    }
    if (sigma < 0.0) CHECK(e.ell < e.p_c);

    CHECK(e.r.has_value() == !e.r_window.empty());
    if (e.r) {
      ++windows;
      const double r = *e.r, mu = *e.mu;
      CHECK(1.0 / r > e.r_window.lower);
      CHECK(1.0 / r < e.r_window.upper);
      CHECK(r > p);
      CHECK(std::abs(mu - (N * (p - 1) / (2 * r * d) - alpha / (2 * d) + p * mu - 1)) <= 1e-12);
      CHECK(std::abs(mu - ((N / (2 * d)) * (1 / e.ell - 1 / r) - sigma - 1)) <= 1e-12);
    }
  }
  // The sweep must exercise both branches.
  CHECK(windows > 50);
  CHECK(at_critical > 50);
}
