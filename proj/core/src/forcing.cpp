#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "fujita/error.hpp"
#include "fujita/quadrature.hpp"
#include "fujita/solver.hpp"
#include "fujita/spectral.hpp"

namespace fujita {
namespace {

// exp(-x) underflows to zero past this.
constexpr double kUnderflow = 745.0;
// Width of the panel nearest s = dt in units of 1/lambda; panels double going left.
constexpr double kFirstPanel = 16.0;

const GaussRule& jacobi_rule(int n, double sigma) {
  static std::mutex m;
  static std::map<std::pair<int, double>, GaussRule> cache;
  std::lock_guard lock(m);
  const auto key = std::make_pair(n, sigma);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss_jacobi(n, 0.0, sigma)).first;
  return it->second;
}

class ModeIntegrator {
 public:
  ModeIntegrator(const ForcingSpec& forcing, double t0, double dt)
      : forcing_(forcing), t0_(t0), dt_(dt), sigma_(small_time_exponent(forcing)) {
    validate(forcing);
    if (!(t0 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "t0 must be nonnegative");
    if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
    singular_start_ = (t0 == 0.0 && sigma_ != 0.0);
    // zeta(t0 + s) has a branch point at s = -t0 unless it is constant.
    const auto* pure = std::get_if<PurePower>(&forcing);
    graded_ = !(pure && pure->sigma == 0.0);
    full_ok_ = !graded_ || t0 == 0.0 || dt <= t0;
    if (const auto* f = std::get_if<TwoRegime>(&forcing)) {
      const double s = f->crossover_time - t0;
      if (s > 0.0 && s < dt) split_ = s;
    }
    for (int n : {8, 16}) {
      Cached& c = n == 8 ? full8_ : full16_;
      build_panel(0.0, split_ > 0.0 ? split_ : dt, n, c);
    }
  }

  double integrate(double lambda) const {
    if (lambda * dt_ <= 2.0 && split_ < 0.0 && full_ok_) return apply(full8_, lambda);

    std::vector<double> cuts;  // descending breakpoints, starting at dt
    cuts.push_back(dt_);
    const double lo = lambda > 0.0 ? std::max(0.0, dt_ - kUnderflow / lambda) : 0.0;
    double right = dt_;
    double width = lambda > 0.0 ? std::min(kFirstPanel / lambda, dt_) : dt_;
    while (right - width > lo + 0.5 * width) {
      right -= width;
      cuts.push_back(right);
      width *= 2.0;
    }
    const double rest = right - lo;
    if (rest > 0.0) {
      const int pieces = std::max(1, static_cast<int>(std::ceil(rest / width - 1e-12)));
      for (int k = 1; k < pieces; ++k) cuts.push_back(right - rest * k / pieces);
      cuts.push_back(lo);
    }
    if (split_ > 0.0) cuts.push_back(split_);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (graded_) {
      // Keep every panel [a, b] within b - a <= t0 + a of the branch point;
      // the panel touching s = 0 at t0 = 0 is covered by the Jacobi rule.
      std::vector<double> refined{cuts.front()};
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double x = cuts[k];
        while (t0_ + x > 0.0 && cuts[k + 1] - x > t0_ + x) {
          x += t0_ + x;
          refined.push_back(x);
        }
        refined.push_back(cuts[k + 1]);
      }
      cuts = std::move(refined);
    }

    double total = 0.0;
    Cached panel;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double a = cuts[k], b = cuts[k + 1];
      const int n = lambda * (b - a) <= 2.0 ? 8 : 16;
      if (a == 0.0 && full_ok_ && (split_ < 0.0 ? b == dt_ : b == split_)) {
        total += apply(n == 8 ? full8_ : full16_, lambda);
        continue;
      }
      build_panel(a, b, n, panel);
      total += apply(panel, lambda);
    }
    return total;
  }

 private:
  // Nodes s_i in [a, b] and weights already multiplied by zeta(t0 + s_i)
  // (or by zeta / s^sigma when the singular weight is built into the rule).
  struct Cached {
    std::vector<double> nodes;
    std::vector<double> weights;
  };

  void build_panel(double a, double b, int n, Cached& out) const {
    out.nodes.resize(static_cast<std::size_t>(n));
    out.weights.resize(static_cast<std::size_t>(n));
    if (a == 0.0 && singular_start_) {
      // On [0, b] zeta(s) = s^sigma exactly (b never passes the crossover).
      const GaussRule& base = jacobi_rule(n, sigma_);
      const double scale = std::pow(0.5 * b, sigma_ + 1.0);
      for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        out.nodes[i] = 0.5 * b * (1.0 + base.nodes[i]);
        out.weights[i] = scale * base.weights[i];
      }
      return;
    }
    const GaussRule& base = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
      out.nodes[i] = mid + half * base.nodes[i];
      out.weights[i] = half * base.weights[i] * zeta(forcing_, t0_ + out.nodes[i]);
    }
  }

  double apply(const Cached& c, double lambda) const {
    double s = 0.0;
    for (std::size_t i = 0; i < c.nodes.size(); ++i) s += c.weights[i] * std::exp(-lambda * (dt_ - c.nodes[i]));
    return s;
  }

  ForcingSpec forcing_;
  double t0_, dt_, sigma_;
  bool singular_start_ = false;
  bool graded_ = false;
  bool full_ok_ = true;
  double split_ = -1.0;
  Cached full8_, full16_;
};

}  // namespace

double forcing_mode_integral(const ForcingSpec& forcing, double t0, double dt, double lambda) {
  if (is_zero(forcing)) return 0.0;
  return ModeIntegrator(forcing, t0, dt).integrate(lambda);
}

std::vector<double> forcing_multipliers(const ForcingSpec& forcing, double t0, double dt,
                                        std::span<const double> lambdas) {
  std::vector<double> out(lambdas.size(), 0.0);
  if (is_zero(forcing)) return out;
  const ModeIntegrator integrator(forcing, t0, dt);
  for (std::size_t k = 0; k < lambdas.size(); ++k) out[k] = integrator.integrate(lambdas[k]);
  return out;
}

Field forcing_increment(double t0, double dt, const ModelParams& params) {
  Spectrum s = params.w.spectrum();
  const auto classes = radial_classes(params.grid);
  std::vector<double> lambda = class_xi2(params.grid, *classes);
  for (double& l : lambda) l = laplacian_symbol(l, params.d);
  const std::vector<double> g = forcing_multipliers(params.forcing, t0, dt, lambda);
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.coeffs[k] *= g[classes->class_of[k]];
  return inverse(s);
}

}  // namespace fujita
