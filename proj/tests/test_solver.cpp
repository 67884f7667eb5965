#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fujita/error.hpp"
#include "fujita/picard.hpp"
#include "fujita/quadrature.hpp"
#include "fujita/run.hpp"
#include "fujita/solver.hpp"
#include "fujita/spectral.hpp"
#include "support.hpp"

using namespace fujita;
using fujita::testing::gaussian;
using fujita::testing::max_abs_diff;
using fujita::testing::random_field;
using fujita::testing::rel_sup_diff;

namespace {

Reaction zero_reaction() {
  return [](std::span<const double>, std::span<double> out) { std::fill(out.begin(), out.end(), 0.0); };
}

// F(u) = G u for a fixed field G.
Reaction linear_reaction(const Field& G) {
  return [G](std::span<const double> u, std::span<double> out) {
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = G[i] * u[i];
  };
}

Field march(const Stepper& s, const Field& u0, double t0, double dt, int steps) {
  Field u = u0;
  for (int k = 0; k < steps; ++k) u = s.step(u, t0 + k * dt, dt);
  return u;
}

}  // namespace

TEST_CASE("quadrature rules") {
  const GaussRule& gl = gauss_legendre(8);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 14);
  CHECK(s == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
  // int_0^2 s^{-1/2} s^3 ds = 2^{3.5} / 3.5
  const EndpointRule er = left_singular_rule(8, -0.5, 2.0);
  double e = 0.0;
  for (std::size_t i = 0; i < er.nodes.size(); ++i) e += er.weights[i] * std::pow(er.nodes[i], 3);
  CHECK(e == doctest::Approx(std::pow(2.0, 3.5) / 3.5).epsilon(1e-13));
  CHECK(adaptive_gauss_legendre([](double x) { return std::exp(-x * x); }, 0.0, 5.0, 1e-12) ==
        doctest::Approx(std::sqrt(std::numbers::pi) / 2 * std::erf(5.0)).epsilon(1e-12));
}

TEST_CASE("nonlinearity") {
  const GridSpec g = make_grid(1, 4.0, 64);
  ModelParams m = make_model(g, 1.0, 2.0, 0.0);
  CHECK(nonlinearity(Field::zeros(g), m).sup_abs() == 0.0);
  CHECK(max_abs_diff(nonlinearity(Field::constant(g, 3.0), m), Field::constant(g, 9.0)) == 0.0);

  const Field u = random_field(g, 8);
  for (double alpha : {-0.5, 0.0, 1.5}) {
    for (bool sign : {false, true}) {
      ModelParams mp = make_model(g, 1.0, 2.3, alpha);
      mp.signed_nonlinearity = sign;
      const Field got = nonlinearity(u, mp);
      double worst = 0.0;
      for (std::size_t i = 0; i < g.total_points(); ++i) {
        const double r = std::sqrt(g.radius_squared(i));
        const double weight = std::pow(std::max(r, mp.reg_radius), alpha);
        double v = std::pow(std::abs(u[i]), 2.3);
        if (sign && u[i] < 0) v = -v;
        worst = std::max(worst, std::abs(got[i] - weight * v) / std::max(1.0, std::abs(weight * v)));
      }
      CHECK(worst <= 1e-14);
    }
  }
}

TEST_CASE("phi functions") {
  for (double z : {0.0, 1e-9, 1e-5, 1e-3, 0.05, 0.5, 3.0, 50.0}) {
    const double ref1 = z == 0.0 ? 1.0 : -std::expm1(-z) / z;
    CHECK(phi1(z) == doctest::Approx(ref1).epsilon(1e-14));
    if (z >= 0.5) CHECK(phi2(z) == doctest::Approx((z - 1 + std::exp(-z)) / (z * z)).epsilon(1e-13));
  }
  // sum_k (-z)^k / (k + 2)! in long double on both sides of the series switch.
  for (double z : {0.0, 0.01, 0.0999999, 0.1000001, 0.2}) {
    long double term = 0.5L, sum = 0.0L;
    for (int k = 0; k < 40; ++k) {
      sum += term;
      term *= -static_cast<long double>(z) / (k + 3);
    }
    CHECK(phi2(z) == doctest::Approx(static_cast<double>(sum)).epsilon(1e-14));
  }
}

TEST_CASE("forcing mode integral closed forms") {
  for (double sigma : {-0.9, -0.5, 0.0, 0.4}) {
    const double dt = 0.37;
    CHECK(forcing_mode_integral(PurePower{sigma}, 0.0, dt, 0.0) ==
          doctest::Approx(std::pow(dt, sigma + 1) / (sigma + 1)).epsilon(1e-13));
  }
  for (double lambda : {1e-6, 0.3, 4.0, 81.0, 1e4}) {
    const double dt = 0.2;
    const double exact = -std::expm1(-dt * lambda) / lambda;
    CHECK(std::abs(forcing_mode_integral(PurePower{0.0}, 0.0, dt, lambda) / exact - 1) <= 1e-10);
    const double quad = adaptive_gauss_legendre([&](double s) { return std::exp(-(dt - s) * lambda); }, 0, dt, 1e-13);
    CHECK(std::abs(quad / exact - 1) <= 1e-10);
  }
}

TEST_CASE("forcing mode integral against independent quadrature") {
  // s = v^2 removes the s^{-1/2} endpoint singularity.
  for (double lambda : {0.0, 0.7, 25.0, 900.0}) {
    for (double dt : {1e-3, 0.1, 2.0}) {
      const double ref = adaptive_gauss_legendre(
          [&](double v) { return 2.0 * std::exp(-(dt - v * v) * lambda); }, 0.0, std::sqrt(dt), 1e-13);
      CHECK(std::abs(forcing_mode_integral(PurePower{-0.5}, 0.0, dt, lambda) / ref - 1) <= 1e-10);
      const double t0 = 0.8;
      const double ref2 = adaptive_gauss_legendre(
          [&](double s) { return std::pow(t0 + s, -0.5) * std::exp(-(dt - s) * lambda); }, 0.0, dt, 1e-13);
      CHECK(std::abs(forcing_mode_integral(PurePower{-0.5}, t0, dt, lambda) / ref2 - 1) <= 1e-10);
    }
  }
  const TwoRegime two{-0.5, 0.5, 1.0};
  const double ref = adaptive_gauss_legendre(
      [&](double s) { return zeta(two, 0.6 + s) * std::exp(-(0.9 - s) * 3.0); }, 0.0, 0.9, 1e-13);
  CHECK(std::abs(forcing_mode_integral(two, 0.6, 0.9, 3.0) / ref - 1) <= 1e-10);
}

TEST_CASE("forcing specs") {
  const TwoRegime two{-0.5, 0.5, 4.0};
  CHECK(zeta(two, 4.0) == doctest::Approx(0.5));
  CHECK(zeta(two, 16.0) == doctest::Approx(0.5 * 2.0));
  CHECK(zeta(PurePower{-0.5}, 4.0) == 0.5);
  CHECK_THROWS_AS(validate(ForcingSpec{PurePower{-1.0}}), Error);
  const GridSpec g = make_grid(1, 4.0, 32);
  ModelParams m = make_model(g, 1.0, 2.0, 0.0);
  m.forcing = PurePower{-1.2};
  CHECK_THROWS_AS(forcing_increment(0.0, 0.1, m), Error);
}

TEST_CASE("forcing composed over steps matches dense quadrature") {
  const GridSpec g = make_grid(1, 20.0, 256);
  ModelParams m = make_model(g, 0.5, 2.0, 0.0);
  m.forcing = PurePower{-0.5};
  m.w = gaussian(g, 1.0, 1.0);
  const double T = 1.0;
  const int steps = 40;
  const double dt = T / steps;
  Field acc = Field::zeros(g);
  for (int k = 0; k < steps; ++k) acc = semigroup_apply(acc, m.d, dt) + forcing_increment(k * dt, dt, m);

  // int_0^T s^{-1/2} S(T - s) w ds = int_0^{sqrt T} 2 S(T - v^2) w dv, with
  // 625 panels of 16-point Gauss-Legendre (10^4 nodes).
  const GaussRule& gl = gauss_legendre(16);
  const int panels = 625;
  const double width = std::sqrt(T) / panels;
  RealVector ref(g.total_points(), 0.0);
  for (int pnl = 0; pnl < panels; ++pnl) {
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double v = width * (pnl + 0.5 * (gl.nodes[i] + 1));
      const Field s = semigroup_apply(m.w, m.d, T - v * v);
      for (std::size_t q = 0; q < ref.size(); ++q) ref[q] += gl.weights[i] * 0.5 * width * 2.0 * s[q];
    }
  }
  CHECK(rel_sup_diff(acc, Field(g, ref)) <= 1e-6);
}

TEST_CASE("linear flow is exact") {
  const GridSpec g = make_grid(2, 8.0, 32);
  ModelParams m = make_model(g, 0.75, 2.0, 0.0);
  const Stepper s(m, zero_reaction());
  const Field u0 = random_field(g, 6);
  CHECK(rel_sup_diff(s.step(u0, 0.0, 0.3), semigroup_apply(u0, 0.75, 0.3)) <= 1e-12);
  CHECK(rel_sup_diff(march(s, u0, 0.0, 0.01, 100), semigroup_apply(u0, 0.75, 1.0)) <= 1e-11);
}

TEST_CASE("step-doubling order with a linear-in-u source") {
  const GridSpec g = make_grid(1, 10.0, 128);
  ModelParams m = make_model(g, 1.0, 2.0, 0.0);
  m.forcing = PurePower{0.0};
  m.w = gaussian(g, 0.3, 2.0);
  const Field G = gaussian(g, 1.5, 3.0);
  const Stepper s(m, linear_reaction(G));
  const Field u0 = gaussian(g, 1.0, 1.5);
  std::vector<double> errs;
  for (double dt : {0.2, 0.1, 0.05, 0.025}) {
    const Field one = s.step(u0, 0.5, dt);
    const Field two = s.step(s.step(u0, 0.5, dt / 2), 0.5 + dt / 2, dt / 2);
    errs.push_back(max_abs_diff(one, two));
  }
  for (std::size_t i = 1; i < errs.size(); ++i) CHECK(std::log2(errs[i - 1] / errs[i]) >= 2.7);
}

TEST_CASE("mean identity for p = 2, alpha = 0") {
  const GridSpec g = make_grid(1, 15.0, 256);
  ModelParams m = make_model(g, 1.0, 2.0, 0.0);
  m.forcing = PurePower{0.0};
  m.w = gaussian(g, 0.2, 1.0);
  m.u0 = gaussian(g, 0.5, 1.0);
  const Stepper s(m);
  // Mismatch between mean(u(T)) - mean(u0) and the trapezoid integral of
  // mean(u^2) + zeta mean(w) along the computed trajectory.
  const auto mismatch = [&](int steps) {
    const double dt = 0.5 / steps;
    Field u = m.u0;
    const auto rhs = [&](const Field& v, double t) { return multiply(v, v).mean() + zeta(m.forcing, t) * m.w.mean(); };
    double integral = 0.0;
    for (int k = 0; k < steps; ++k) {
      const Field next = s.step(u, k * dt, dt);
      integral += 0.5 * dt * (rhs(u, k * dt) + rhs(next, (k + 1) * dt));
      u = next;
    }
    return std::abs(u.mean() - m.u0.mean() - integral);
  };
  const double e1 = mismatch(10), e2 = mismatch(20), e3 = mismatch(40);
  CHECK(e2 < e1 / 3.0);
  CHECK(e3 < e2 / 3.0);
}

TEST_CASE("duhamel_step agrees with the stepper") {
  const GridSpec g = make_grid(1, 10.0, 64);
  ModelParams m = make_model(g, 0.5, 2.0, 0.0);
  m.forcing = PurePower{-0.5};
  m.w = gaussian(g, 0.2, 1.0);
  const Field u = gaussian(g, 0.3, 1.0);
  CHECK(max_abs_diff(duhamel_step(u, 0.0, 0.05, m), Stepper(m).step(u, 0.0, 0.05)) == 0.0);
}

TEST_CASE("second Picard iterate agrees with the stepper to O(eps^2)") {
  const GridSpec g = make_grid(1, 15.0, 128);
  std::vector<double> gaps;
  for (double eps : {1e-2, 5e-3}) {
    ModelParams m = make_model(g, 1.0, 2.0, 0.0);
    m.u0 = gaussian(g, eps, 1.0);
    const Field u2 = picard_solve(m, 0.1, {256, 0.0, 1}).trajectory.back();
    const Field u = march(Stepper(m), m.u0, 0.0, 0.1 / 200, 200);
    gaps.push_back(max_abs_diff(u, u2));
    CHECK(gaps.back() <= eps * eps);
  }
  CHECK(gaps[0] / gaps[1] >= 4.0);
}

TEST_CASE("Picard with zero data converges at once") {
  const GridSpec g = make_grid(1, 5.0, 32);
  ModelParams m = make_model(g, 1.0, 2.0, 0.0);
  const PicardResult r = picard_solve(m, 1.0);
  CHECK(r.converged);
  CHECK(r.iterations == 1);
  for (const Field& f : r.trajectory) CHECK(f.sup_abs() == 0.0);
}

TEST_CASE("Picard reports non-contraction") {
  const GridSpec g = make_grid(1, 10.0, 64);
  ModelParams m = make_model(g, 1.0, 3.0, 0.0);
  m.u0 = gaussian(g, 30.0, 1.0);
  CHECK_THROWS_AS(picard_solve(m, 0.5, {64, 1e-14, 40}), Error);
}

TEST_CASE("run with zero data") {
  const GridSpec g = make_grid(1, 5.0, 32);
  const SolveReport r = run(make_model(g, 1.0, 2.0, 0.0), 2.0);
  CHECK(std::holds_alternative<GlobalCandidate>(r.classification));
  CHECK(r.times.back() == 2.0);
  for (const auto& tr : r.traces) {
    CHECK(tr.values.size() == r.times.size());
    for (double v : tr.values) CHECK(v == 0.0);
  }
  for (std::size_t i = 1; i < r.times.size(); ++i) CHECK(r.times[i] > r.times[i - 1]);
}

TEST_CASE("run detects blow-up") {
  const GridSpec g = make_grid(1, 40.0, 512);
  ModelParams m = make_model(g, 1.0, 2.0, 0.0);
  m.u0 = gaussian(g, 5.0, 3.0);
  RunControl c;
  c.blow_threshold = 100.0;
  const SolveReport r = run(m, 5.0, c);
  REQUIRE(std::holds_alternative<BlowUp>(r.classification));
  const double t_est = std::get<BlowUp>(r.classification).t_est;
  CHECK(t_est >= r.times.back());
  CHECK(t_est < 0.3);  // ODE blow-up time of the peak is 1/5
  CHECK(r.trace(MonitoredNorm::Sup)->back() > 100.0);
}

TEST_CASE("run snapshots land on the interval grid") {
  const GridSpec g = make_grid(1, 20.0, 128);
  ModelParams m = make_model(g, 1.0, 2.0, 0.0);
  m.u0 = gaussian(g, 0.1, 1.0);
  RunControl c;
  c.snapshot_interval = 0.1;
  c.boundary_tolerance = 1.0;
  const SolveReport r = run(m, 1.0, c);
  REQUIRE(r.snapshots.size() == 11);
  for (std::size_t k = 0; k < r.snapshots.size(); ++k) {
    CHECK(r.snapshots[k].time == doctest::Approx(0.1 * k).epsilon(1e-14));
  }
  CHECK(r.times.back() == 1.0);
}

TEST_CASE("blow-up time estimate from an exact profile") {
  std::vector<double> t, s;
  for (int i = 0; i < 10; ++i) {
    t.push_back(0.5 + 0.04 * i);
    s.push_back(std::pow(1.0 - t.back(), -1.0 / 1.5));
  }
  CHECK(estimate_blowup_time(t, s, 2.5) == doctest::Approx(1.0).epsilon(1e-10));
}
