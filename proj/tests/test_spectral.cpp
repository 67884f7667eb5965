#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fujita/error.hpp"
#include "fujita/spectral.hpp"
#include "fujita/transform.hpp"
#include "support.hpp"

using namespace fujita;
using fujita::testing::gaussian;
using fujita::testing::loglog_slope;
using fujita::testing::max_abs_diff;
using fujita::testing::random_field;
using fujita::testing::rel_sup_diff;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("make_grid spacing and wavenumbers") {
  const GridSpec g = make_grid(1, std::numbers::pi, 16);
  CHECK(g.spacing() == doctest::Approx(std::numbers::pi / 8).epsilon(1e-15));
  CHECK(g.wavenumber_unit() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.coordinate(0) == doctest::Approx(-std::numbers::pi));
  CHECK(g.coordinate(3) == doctest::Approx(-std::numbers::pi + 3 * std::numbers::pi / 8));
  CHECK(g.spectral_size() == 9);

  const GridSpec g2 = make_grid(2, 10.0, 64);
  CHECK(g2.total_points() == 64 * 64);
  CHECK(g2.spacing() == 0.3125);
}

TEST_CASE("make_grid rejects bad input") {
  CHECK(code_of([] { make_grid(1, 5.0, 7); }) == ErrorCode::OddResolution);
  CHECK(code_of([] { make_grid(1, 0.0, 8); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([] { make_grid(1, -1.0, 8); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([] { make_grid(4, 1.0, 8); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([] { make_grid(1, 1.0, 6); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([] { make_grid(3, 1.0, 1024, std::size_t{1} << 20); }) == ErrorCode::InvalidGrid);
}

TEST_CASE("round trip reproduces random fields") {
  for (const GridSpec& g : {make_grid(1, 3.0, 64), make_grid(2, 5.0, 32), make_grid(3, 2.0, 16)}) {
    const Field f = random_field(g, 7);
    const Field back = inverse(forward(f));
    CHECK(rel_sup_diff(back, f) <= 1e-12);
  }
}

TEST_CASE("poisoned fields are detected") {
  const GridSpec g = make_grid(1, 1.0, 8);
  RealVector v(8, 1.0);
  v[3] = std::nan("");
  const Field f(g, v);
  CHECK_FALSE(f.is_finite());
  CHECK_FALSE(fractional_laplacian(f, 1.0).is_finite());
  CHECK_FALSE(semigroup_apply(f, 0.5, 1.0).is_finite());
}

TEST_CASE("fractional laplacian on eigenfunctions") {
  const GridSpec g = make_grid(1, std::numbers::pi, 64);
  CHECK(fractional_laplacian(Field::constant(g, 3.0), 0.7).sup_abs() <= 1e-14);
  const Field c2 = Field::from_function(g, [](auto x) { return std::cos(2 * x[0]); });
  CHECK(max_abs_diff(fractional_laplacian(c2, 1.0), 4.0 * c2) <= 1e-12);
  CHECK(max_abs_diff(fractional_laplacian(c2, 0.5), 2.0 * c2) <= 1e-12);
}

TEST_CASE("semigroup identity and eigenfunction decay") {
  const GridSpec g = make_grid(1, std::numbers::pi, 64);
  const Field f = random_field(g, 3);
  CHECK(max_abs_diff(semigroup_apply(f, 0.6, 0.0), f) <= 1e-14);
  for (double d : {0.25, 0.5, 1.0, 2.0}) {
    const int k = 3;
    const Field c = Field::from_function(g, [&](auto x) { return std::cos(k * x[0]); });
    const double decay = std::exp(-0.3 * std::pow(k, 2 * d));
    CHECK(max_abs_diff(semigroup_apply(c, d, 0.3), decay * c) <= 1e-13);
  }
}

TEST_CASE("heat semigroup matches the periodized Gaussian solution") {
  const GridSpec g = make_grid(1, 20.0, 256);
  const double L = g.half_width;
  // Centered Gaussian density of variance v.
  const auto density = [&](double v) {
    return Field::from_function(g, [=](auto x) {
      double s = 0.0;
      for (int k = -5; k <= 5; ++k) {
        const double y = x[0] + 2.0 * L * k;
        s += std::exp(-y * y / (2 * v)) / std::sqrt(2 * std::numbers::pi * v);
      }
      return s;
    });
  };
  const double t = 0.5;
  const Field out = semigroup_apply(density(2.0), 1.0, t);
  CHECK(rel_sup_diff(out, density(2.0 + 2.0 * t)) <= 1e-6);
}

TEST_CASE("semigroup law, mass and linearity on random fields") {
  const GridSpec g = make_grid(2, 6.0, 32);
  const Field f = random_field(g, 11), h = random_field(g, 12);
  for (double d : {0.25, 0.5, 1.0, 2.0}) {
    const Field two = semigroup_apply(semigroup_apply(f, d, 0.2), d, 0.3);
    CHECK(rel_sup_diff(two, semigroup_apply(f, d, 0.5)) <= 1e-12);
    CHECK(std::abs(semigroup_apply(f, d, 0.7).mean() - f.mean()) <= 1e-12);
    const Field lhs = semigroup_apply(2.0 * f + (-3.0) * h, d, 0.4);
    const Field rhs = 2.0 * semigroup_apply(f, d, 0.4) + (-3.0) * semigroup_apply(h, d, 0.4);
    CHECK(rel_sup_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("sup norm contraction for d <= 1 on resolved times") {
  const GridSpec g = make_grid(1, 20.0, 256);
  const Field f = random_field(g, 5);
  CHECK(semigroup_apply(f, 1.0, 0.1).sup_abs() <= f.sup_abs() * (1 + 1e-8));
  CHECK(semigroup_apply(f, 0.5, 2.0).sup_abs() <= f.sup_abs() * (1 + 1e-8));
  CHECK(semigroup_apply(f, 0.25, 8.0).sup_abs() <= f.sup_abs() * (1 + 1e-8));
}

TEST_CASE("spike decays at rate -N/(2d)") {
  const GridSpec g = make_grid(1, 200.0, 4096);
  RealVector v(g.total_points(), 0.0);
  v[g.points_per_axis / 2] = 1.0;
  const Field spike(g, v);
  for (double d : {0.5, 1.0}) {
    std::vector<double> ts, sups;
    for (double t = 1.0; t <= 4.0 + 1e-12; t *= std::sqrt(2.0)) {
      ts.push_back(t);
      sups.push_back(semigroup_apply(spike, d, t).sup_abs());
    }
    const double expected = -1.0 / (2 * d);
    CHECK(std::abs(loglog_slope(ts, sups) / expected - 1.0) <= 0.05);
  }
}

TEST_CASE("radial weight") {
  const GridSpec g = make_grid(1, 10.0, 80);
  const Field one = radial_weight(g, 0.0, 0.1);
  CHECK(max_abs_diff(one, Field::constant(g, 1.0)) == 0.0);
  const Field sq = radial_weight(g, 2.0, 0.1);
  // coordinate(16) = -10 + 16 * 0.25 = -6, coordinate(28) = -3
  CHECK(sq[28] == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(sq[16] == doctest::Approx(36.0).epsilon(1e-14));
  const GridSpec fine = make_grid(1, 1.0, 40);  // h = 0.05, origin at index 20
  const Field inv = radial_weight(fine, -1.0, 0.1);
  CHECK(inv[21] == doctest::Approx(10.0).epsilon(1e-14));  // |x| = 0.05 < 0.1
  CHECK(inv[20] == doctest::Approx(10.0).epsilon(1e-14));  // origin
  CHECK(inv[30] == doctest::Approx(2.0).epsilon(1e-14));   // |x| = 0.5
}

TEST_CASE("weighted semigroup is the composition with the weight") {
  const GridSpec g = make_grid(1, 10.0, 256);
  const double r = default_reg_radius(g);
  const Field lhs = weighted_semigroup_apply(Field::constant(g, 1.0), 1.0, 0.5, 1.0, r);
  const Field rhs = semigroup_apply(radial_weight(g, -0.5, r), 1.0, 1.0);
  CHECK(max_abs_diff(lhs, rhs) <= 1e-14);
  CHECK(code_of([&] { weighted_semigroup_apply(Field::constant(g, 1.0), 1.0, 1.0, 1.0); }) ==
        ErrorCode::NonLocallyIntegrableWeight);
  CHECK(code_of([&] { weighted_semigroup_apply(Field::constant(g, 1.0), 1.0, 0.0, 1.0); }) ==
        ErrorCode::NonLocallyIntegrableWeight);
}

TEST_CASE("radial classes group modes by |j|^2") {
  const GridSpec g = make_grid(2, 1.0, 8);
  const auto rc = radial_classes(g);
  CHECK(rc->class_of.size() == g.spectral_size());
  CHECK(std::is_sorted(rc->j2.begin(), rc->j2.end()));
  CHECK(rc->j2.front() == 0.0);
  CHECK(rc->j2.back() == 32.0);  // (-4, 4)
}

TEST_CASE("spectral tail fraction") {
  const GridSpec g = make_grid(1, 10.0, 256);
  CHECK(spectral_tail_fraction(forward(gaussian(g, 1.0, 2.0))) < 1e-20);
  CHECK(spectral_tail_fraction(forward(random_field(g, 1))) > 0.1);
  CHECK(spectral_tail_fraction(forward(Field::zeros(g))) == 0.0);
}
