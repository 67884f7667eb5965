#include <fftw3.h>

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

#include "fujita/aligned.hpp"
#include "fujita/transform.hpp"

namespace fujita {
namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Plans are created once per (dim, n) and never destroyed; FFTW execution of
// an existing plan on new arrays is thread safe, planning is not.
const PlanPair& plans_for(const GridSpec& grid) {
  static std::map<std::pair<int, std::size_t>, PlanPair> cache;
  std::lock_guard lock(planner_mutex());
  const auto key = std::make_pair(grid.dim, grid.points_per_axis);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  int dims[3];
  for (int k = 0; k < grid.dim; ++k) dims[k] = static_cast<int>(grid.points_per_axis);
  RealVector real(grid.total_points());
  ComplexVector cplx(grid.spectral_size());
  auto* c = reinterpret_cast<fftw_complex*>(cplx.data());
  PlanPair pair;
  pair.r2c = fftw_plan_dft_r2c(grid.dim, dims, real.data(), c, FFTW_ESTIMATE);
  pair.c2r = fftw_plan_dft_c2r(grid.dim, dims, c, real.data(), FFTW_ESTIMATE);
  return cache.emplace(key, pair).first->second;
}

bool aligned(const void* p) {
  return reinterpret_cast<std::uintptr_t>(p) % 64 == 0;
}

}  // namespace

void forward_transform(const GridSpec& grid, const double* in, std::complex<double>* out) {
  const PlanPair& plans = plans_for(grid);
  if (aligned(in) && aligned(out)) {
    fftw_execute_dft_r2c(plans.r2c, const_cast<double*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    return;
  }
  RealVector a(in, in + grid.total_points());
  ComplexVector b(grid.spectral_size());
  fftw_execute_dft_r2c(plans.r2c, a.data(), reinterpret_cast<fftw_complex*>(b.data()));
  std::copy(b.begin(), b.end(), out);
}

void inverse_transform(const GridSpec& grid, const std::complex<double>* in, double* out) {
  const PlanPair& plans = plans_for(grid);
  // c2r overwrites its input, so always work on a private copy.
  thread_local ComplexVector scratch;
  scratch.assign(in, in + grid.spectral_size());
  const std::size_t total = grid.total_points();
  if (aligned(out)) {
    fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out);
  } else {
    RealVector tmp(total);
    fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), tmp.data());
    std::copy(tmp.begin(), tmp.end(), out);
  }
  const double scale = 1.0 / static_cast<double>(total);
  for (std::size_t i = 0; i < total; ++i) out[i] *= scale;
}

std::shared_ptr<const RadialClasses> radial_classes(const GridSpec& grid) {
  static std::mutex m;
  static std::map<std::pair<int, std::size_t>, std::shared_ptr<const RadialClasses>> cache;
  const auto key = std::make_pair(grid.dim, grid.points_per_axis);
  {
    std::lock_guard lock(m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const std::size_t n = grid.points_per_axis;
  const std::size_t half = n / 2;
  const std::size_t last = half + 1;
  const std::size_t size = grid.spectral_size();
  auto signed_index = [&](std::size_t i) -> long long {
    return i < half ? static_cast<long long>(i) : static_cast<long long>(i) - static_cast<long long>(n);
  };

  std::vector<long long> j2(size);
  std::vector<bool> nyquist(size, false);
  for (std::size_t flat = 0; flat < size; ++flat) {
    std::size_t rest = flat;
    const std::size_t jl = rest % last;
    rest /= last;
    long long sum = static_cast<long long>(jl * jl);
    bool nyq = (jl == half);
    for (int k = grid.dim - 2; k >= 0; --k) {
      const std::size_t i = rest % n;
      rest /= n;
      const long long j = signed_index(i);
      sum += j * j;
      nyq = nyq || (i == half);
    }
    j2[flat] = sum;
    nyquist[flat] = nyq;
  }

  std::vector<long long> distinct = j2;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  auto classes = std::make_shared<RadialClasses>();
  classes->j2.assign(distinct.begin(), distinct.end());
  classes->class_of.resize(size);
  for (std::size_t flat = 0; flat < size; ++flat) {
    classes->class_of[flat] = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), j2[flat]) - distinct.begin());
  }
  classes->nyquist = std::move(nyquist);

  std::lock_guard lock(m);
  return cache.emplace(key, std::move(classes)).first->second;
}

std::vector<double> class_xi2(const GridSpec& grid, const RadialClasses& classes) {
  const double unit = grid.wavenumber_unit();
  std::vector<double> xi2(classes.j2.size());
  for (std::size_t c = 0; c < xi2.size(); ++c) xi2[c] = unit * unit * classes.j2[c];
  return xi2;
}

}  // namespace fujita
