#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "fujita/kernels.hpp"
#include "fujita/spectral.hpp"
#include "support.hpp"

using namespace fujita;

TEST_CASE("Gauss kernel value at the origin") {
  const GridSpec g = make_grid(1, 40.0, 1024);
  const KernelProfile k = kernel_profile(g, 1.0);
  CHECK(k.resolved());
  CHECK(std::abs(k.profile[512] - 1.0 / std::sqrt(4 * std::numbers::pi)) <= 1e-6);
}

TEST_CASE("Poisson kernel at the origin matches the torus closed form") {
  const GridSpec g = make_grid(1, 40.0, 1024);
  const double L = g.half_width;
  const double torus = 1.0 / (2 * L) / std::tanh(std::numbers::pi / (2 * L));
  CHECK(std::abs(kernel_profile(g, 0.5).profile[512] - torus) <= 1e-12);
  // The R^N value 1/pi is approached as the box grows.
  const GridSpec wide = make_grid(1, 80.0, 2048);
  CHECK(std::abs(kernel_profile(wide, 0.5).profile[1024] - 1.0 / std::numbers::pi) <= 1e-4);
}

TEST_CASE("kernel integrates to one") {
  const GridSpec g = make_grid(1, 20.0, 512);
  for (double d : {0.25, 0.5, 1.0, 1.5, 2.0}) {
    CHECK(std::abs(kernel_profile(g, d).profile.integral() - 1.0) <= 1e-8);
  }
  const GridSpec g2 = make_grid(2, 12.0, 96);
  CHECK(std::abs(kernel_profile(g2, 0.5).profile.integral() - 1.0) <= 1e-8);
}

namespace {

// Spread of profile values over grid points sharing the same |x|.
double equal_radius_spread(const KernelProfile& k) {
  const GridSpec& g = k.grid;
  std::map<long long, std::pair<double, double>> range;
  for (std::size_t i = 0; i < g.total_points(); ++i) {
    const auto key = std::llround(g.radius_squared(i) / (g.spacing() * g.spacing()));
    auto [it, fresh] = range.try_emplace(key, k.profile[i], k.profile[i]);
    if (!fresh) {
      it->second.first = std::min(it->second.first, k.profile[i]);
      it->second.second = std::max(it->second.second, k.profile[i]);
    }
  }
  double worst = 0.0;
  for (const auto& [key, mm] : range) worst = std::max(worst, mm.second - mm.first);
  return worst;
}

}  // namespace

TEST_CASE("kernel is radially symmetric") {
  const GridSpec g = make_grid(2, 12.0, 96);
  CHECK(equal_radius_spread(kernel_profile(g, 1.0)) <= 1e-10);
  // Algebraic tails feel the periodic images, so only the lattice symmetries
  // (reflections and the axis swap about the origin) are exact.
  const std::size_t n = g.points_per_axis, c = n / 2;
  for (double d : {0.25, 0.5, 2.0}) {
    const KernelProfile k = kernel_profile(g, d);
    double worst = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) {
        const double v = k.profile[i * n + j];
        worst = std::max(worst, std::abs(v - k.profile[j * n + i]));
        worst = std::max(worst, std::abs(v - k.profile[(2 * c - i) * n + j]));
        worst = std::max(worst, std::abs(v - k.profile[i * n + (2 * c - j)]));
      }
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("scaling law") {
  const GridSpec g = make_grid(1, 40.0, 1024);
  CHECK(verify_kernel_scaling(0.7, 1.0, g) <= 1e-13);
  CHECK(verify_kernel_scaling(1.0, 2.0, g) <= 1e-8);
  CHECK(verify_kernel_scaling(2.0, 0.5, g) <= 1e-6);
}

TEST_CASE("kernel sign pattern") {
  const GridSpec g = make_grid(1, 40.0, 1024);
  CHECK(kernel_min(1.0, g) >= -1e-12);
  CHECK(kernel_min(0.5, g) >= -1e-10);
  CHECK(kernel_min(2.0, g) < 0.0);
}

TEST_CASE("under-resolved kernel is flagged") {
  const GridSpec coarse = make_grid(1, 40.0, 64);
  CHECK_FALSE(kernel_profile(coarse, 0.25, 1.0).resolved());
  CHECK(kernel_profile(make_grid(1, 20.0, 256), 1.0).resolved());
}

TEST_CASE("semigroup equals convolution with the kernel") {
  const GridSpec g = make_grid(1, 20.0, 128);
  const Field f = fujita::testing::random_field(g, 9);
  for (double d : {0.5, 1.0, 2.0}) {
    const KernelProfile k = kernel_profile(g, d);
    const std::size_t n = g.points_per_axis;
    RealVector conv(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        conv[i] += f[j] * k.profile[(i + n - j + n / 2) % n] * g.spacing();
      }
    }
    CHECK(fujita::testing::rel_sup_diff(Field(g, conv), semigroup_apply(f, d, 1.0)) <= 1e-8);
  }
}

TEST_CASE("Poisson kernel tail decays like |x|^-2") {
  const KernelProfile k = kernel_profile(make_grid(1, 400.0, 8192), 0.5);
  CHECK(std::abs(kernel_tail_slope(k, 10.0, 40.0) + 2.0) <= 0.05);
}
