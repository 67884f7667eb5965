#include "fujita/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fujita/certifier.hpp"
#include "fujita/error.hpp"
#include "fujita/exponents.hpp"
#include "fujita/spectral.hpp"

namespace fujita::harness {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ConfigError, path + ": " + msg);
}

// Typed access to one JSON object; remembers which keys were read so that
// unknown (usually misspelled) keys can be rejected.
class Table {
 public:
  Table(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected a table");
  }

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    seen_.insert(key);
    if (!has(key)) {
      if (fallback) return *fallback;
      fail(at(key), "missing required number");
    }
    const json& v = j_.at(key);
    if (!v.is_number()) fail(at(key), "expected a number");
    return v.get<double>();
  }

  std::optional<double> optional_number(const std::string& key) {
    seen_.insert(key);
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  std::int64_t integer(const std::string& key, std::optional<std::int64_t> fallback = std::nullopt) {
    seen_.insert(key);
    if (!has(key)) {
      if (fallback) return *fallback;
      fail(at(key), "missing required integer");
    }
    const json& v = j_.at(key);
    if (!v.is_number_integer()) fail(at(key), "expected an integer");
    return v.get<std::int64_t>();
  }

  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number_unsigned()) fail(at(key), "expected a nonnegative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(const std::string& key, bool fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_boolean()) fail(at(key), "expected true or false");
    return v.get<bool>();
  }

  std::string string(const std::string& key, const std::string& fallback) {
    seen_.insert(key);
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_string()) fail(at(key), "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    seen_.insert(key);
    if (!has(key)) return {};
    const json& v = j_.at(key);
    if (!v.is_array()) fail(at(key), "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail(at(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  std::optional<Table> table(const std::string& key) {
    seen_.insert(key);
    if (!has(key)) return std::nullopt;
    return Table(j_.at(key), at(key));
  }

  void mark(const std::string& key) { seen_.insert(key); }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    return j_.at(key);
  }

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(at(it.key()), "unknown key");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

DataPreset read_preset(Table t, int dim) {
  DataPreset p;
  p.preset = t.string("preset", "zero");
  p.amplitude = t.number("amplitude", 1.0);
  p.width = t.number("width", 1.0);
  p.center = t.numbers("center");
  p.cutoff_radius = t.number("cutoff_radius", 0.0);
  if (t.has("exponent")) {
    const json& e = t.raw("exponent");
    if (e.is_number()) {
      p.exponent = e.get<double>();
    } else if (e.is_string()) {
      p.exponent_rule = e.get<std::string>();
    } else {
      fail(t.at("exponent"), "expected a number or a rule name");
    }
  }
  t.mark("exponent");
  t.finish();

  if (p.preset != "zero" && p.preset != "gaussian" && p.preset != "power_law") {
    fail(t.at("preset"), "unknown preset '" + p.preset + "' (zero, gaussian, power_law)");
  }
  if (!std::isfinite(p.amplitude)) fail(t.at("amplitude"), "must be finite");
  if (p.preset == "gaussian" && !(p.width > 0.0)) fail(t.at("width"), "must be positive");
  if (!p.center.empty() && static_cast<int>(p.center.size()) != dim) {
    fail(t.at("center"), "needs one coordinate per dimension");
  }
  if (p.cutoff_radius < 0.0) fail(t.at("cutoff_radius"), "must be nonnegative");
  if (p.preset == "power_law") {
    if (!p.exponent && p.exponent_rule.empty()) fail(t.at("exponent"), "power_law needs an exponent");
    if (p.exponent && !(*p.exponent >= 0.0)) fail(t.at("exponent"), "must be nonnegative");
    if (!p.exponent_rule.empty() && p.exponent_rule != "critical_data" && p.exponent_rule != "critical_forcing") {
      fail(t.at("exponent"), "unknown rule '" + p.exponent_rule + "' (critical_data, critical_forcing)");
    }
  }
  return p;
}

json write_preset(const DataPreset& p) {
  json j;
  j["preset"] = p.preset;
  j["amplitude"] = p.amplitude;
  j["width"] = p.width;
  j["center"] = p.center;
  j["cutoff_radius"] = p.cutoff_radius;
  if (p.exponent) j["exponent"] = *p.exponent;
  else if (!p.exponent_rule.empty()) j["exponent"] = p.exponent_rule;
  return j;
}

void check_alpha(double alpha, double d, int dim, const std::string& path) {
  if (alpha < 0.0 && !(-alpha < std::min(2.0 * d, static_cast<double>(dim)))) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " violates -alpha < min(2d, N) = " << std::min(2.0 * d, static_cast<double>(dim));
    fail(path, msg.str());
  }
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ConfigError, std::string("parse error: ") + e.what());
  }
  Table top(root, "");
  ExperimentConfig c;

  {
    auto g = top.table("grid");
    if (!g) fail("grid", "missing required table");
    c.dim = static_cast<int>(g->integer("dim"));
    c.half_width = g->number("half_width");
    const auto n = g->integer("points_per_axis");
    g->finish();
    if (c.dim < 1 || c.dim > 3) fail("grid.dim", "must be 1, 2 or 3");
    if (!(c.half_width > 0.0)) fail("grid.half_width", "must be positive");
    if (n < 8 || n % 2 != 0) fail("grid.points_per_axis", "must be an even integer >= 8");
    c.points_per_axis = static_cast<std::size_t>(n);
    try {
      make_grid(c.dim, c.half_width, c.points_per_axis);
    } catch (const Error& e) {
      fail("grid", e.what());
    }
  }
  {
    auto m = top.table("model");
    if (!m) fail("model", "missing required table");
    c.d = m->number("d");
    c.p = m->number("p", 2.0);
    c.alpha = m->number("alpha", 0.0);
    c.signed_nonlinearity = m->boolean("signed_nonlinearity", false);
    c.reg_radius = m->optional_number("reg_radius");
    m->finish();
    if (!(c.d > 0.0)) fail("model.d", "must be positive");
    if (!(c.p > 1.0)) fail("model.p", "must exceed 1");
    check_alpha(c.alpha, c.d, c.dim, "model.alpha");
    if (c.reg_radius && !(*c.reg_radius > 0.0)) fail("model.reg_radius", "must be positive");
  }
  if (auto f = top.table("forcing")) {
    c.forcing.kind = f->string("kind", "zero");
    c.forcing.sigma = f->number("sigma", 0.0);
    c.forcing.m = f->number("m", 0.0);
    c.forcing.crossover_time = f->number("crossover_time", 1.0);
    f->finish();
    if (c.forcing.kind != "zero" && c.forcing.kind != "pure_power" && c.forcing.kind != "two_regime") {
      fail("forcing.kind", "unknown kind '" + c.forcing.kind + "' (zero, pure_power, two_regime)");
    }
    if (!(c.forcing.sigma > -1.0)) fail("forcing.sigma", "must exceed -1");
    if (!(c.forcing.crossover_time > 0.0)) fail("forcing.crossover_time", "must be positive");
  }
  if (auto w = top.table("w")) c.w = read_preset(*w, c.dim);
  if (auto u = top.table("u0")) {
    Table t = *u;
    c.perturbation = t.number("perturbation", 0.0);
    c.u0 = read_preset(t, c.dim);
    if (!(c.perturbation >= 0.0)) fail("u0.perturbation", "must be nonnegative");
  }
  if (auto r = top.table("run")) {
    c.horizon = r->number("horizon", 1.0);
    c.dt_init = r->number("dt_init", 1e-3);
    c.blow_threshold = r->optional_number("blow_threshold");
    c.dt_max = r->number("dt_max", std::numeric_limits<double>::infinity());
    c.boundary_tolerance = r->number("boundary_tolerance", 1e-6);
    c.tail_tolerance = r->number("tail_tolerance", 1e-4);
    c.snapshot_interval = r->number("snapshot_interval", 0.0);
    r->finish();
    if (!(c.horizon > 0.0)) fail("run.horizon", "must be positive");
    if (!(c.dt_init > 0.0)) fail("run.dt_init", "must be positive");
    if (c.blow_threshold && !(*c.blow_threshold > 0.0)) fail("run.blow_threshold", "must be positive");
    if (!(c.dt_max > 0.0)) fail("run.dt_max", "must be positive");
    if (!(c.boundary_tolerance > 0.0)) fail("run.boundary_tolerance", "must be positive");
    if (!(c.tail_tolerance > 0.0)) fail("run.tail_tolerance", "must be positive");
    if (!(c.snapshot_interval >= 0.0)) fail("run.snapshot_interval", "must be nonnegative");
  }
  if (auto s = top.table("scan")) {
    if (s->has("p") && s->raw("p").is_object()) {
      Table range(s->raw("p"), "scan.p");
      const double start = range.number("start");
      const double stop = range.number("stop");
      const auto count = range.integer("count");
      range.finish();
      if (count < 1) fail("scan.p.count", "range must be nonempty");
      if (!(stop >= start)) fail("scan.p.stop", "must be >= start");
      for (std::int64_t i = 0; i < count; ++i) {
        c.scan_p.push_back(count == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
      }
    } else {
      c.scan_p = s->numbers("p");
    }
    c.scan_sigma = s->numbers("sigma");
    c.two_regime_sigma = s->number("two_regime_sigma", -0.5);
    c.two_regime_crossover = s->number("crossover_time", 1.0);
    s->finish();
    for (std::size_t i = 0; i < c.scan_p.size(); ++i) {
      if (!(c.scan_p[i] > 1.0)) fail("scan.p[" + std::to_string(i) + "]", "must exceed 1");
    }
    for (std::size_t i = 0; i < c.scan_sigma.size(); ++i) {
      if (!(c.scan_sigma[i] > -1.0)) fail("scan.sigma[" + std::to_string(i) + "]", "must exceed -1");
    }
    if (!(c.two_regime_sigma > -1.0)) fail("scan.two_regime_sigma", "must exceed -1");
    if (!(c.two_regime_crossover > 0.0)) fail("scan.crossover_time", "must be positive");
  }
  c.seed = top.unsigned_integer("seed", 0);
  if (auto o = top.table("output")) {
    c.output_directory = o->string("directory", "out");
    o->finish();
  }
  top.finish();
  return c;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  json j;
  j["grid"] = {{"dim", c.dim}, {"half_width", c.half_width}, {"points_per_axis", c.points_per_axis}};
  j["model"] = {{"d", c.d}, {"p", c.p}, {"alpha", c.alpha}, {"signed_nonlinearity", c.signed_nonlinearity}};
  if (c.reg_radius) j["model"]["reg_radius"] = *c.reg_radius;
  j["forcing"] = {{"kind", c.forcing.kind},
                  {"sigma", c.forcing.sigma},
                  {"m", c.forcing.m},
                  {"crossover_time", c.forcing.crossover_time}};
  j["w"] = write_preset(c.w);
  j["u0"] = write_preset(c.u0);
  j["u0"]["perturbation"] = c.perturbation;
  json run = {{"horizon", c.horizon},
              {"dt_init", c.dt_init},
              {"boundary_tolerance", c.boundary_tolerance},
              {"tail_tolerance", c.tail_tolerance},
              {"snapshot_interval", c.snapshot_interval}};
  if (c.blow_threshold) run["blow_threshold"] = *c.blow_threshold;
  if (std::isfinite(c.dt_max)) run["dt_max"] = c.dt_max;
  j["run"] = run;
  j["scan"] = {{"p", c.scan_p},
               {"sigma", c.scan_sigma},
               {"two_regime_sigma", c.two_regime_sigma},
               {"crossover_time", c.two_regime_crossover}};
  j["seed"] = c.seed;
  j["output"] = {{"directory", c.output_directory}};
  return j.dump(2) + "\n";
}

ForcingSpec config_forcing(const ExperimentConfig& c) {
  if (c.forcing.kind == "pure_power") return PurePower{c.forcing.sigma};
  if (c.forcing.kind == "two_regime") return TwoRegime{c.forcing.sigma, c.forcing.m, c.forcing.crossover_time};
  return ZeroForcing{};
}

ForcingSpec row_forcing(const ExperimentConfig& c, double sigma) {
  if (sigma > 0.0) return TwoRegime{c.two_regime_sigma, sigma, c.two_regime_crossover};
  return PurePower{sigma};
}

GridSpec config_grid(const ExperimentConfig& c) { return make_grid(c.dim, c.half_width, c.points_per_axis); }

Field build_data(const DataPreset& preset, const GridSpec& grid, double d, double p, double alpha, double sigma,
                 double reg_radius) {
  if (preset.preset == "zero") return Field::zeros(grid);
  std::vector<double> center = preset.center;
  center.resize(static_cast<std::size_t>(grid.dim), 0.0);
  if (preset.preset == "gaussian") {
    const double inv_w2 = 1.0 / (preset.width * preset.width);
    return Field::from_function(grid, [&](std::span<const double> x) {
      double r2 = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) r2 += (x[k] - center[k]) * (x[k] - center[k]);
      return preset.amplitude * std::exp(-r2 * inv_w2);
    });
  }
  double e = preset.exponent.value_or(0.0);
  if (preset.exponent_rule == "critical_data") {
    e = (2.0 * d + alpha) / (p - 1.0);
  } else if (preset.exponent_rule == "critical_forcing") {
    e = grid.dim / exponents(grid.dim, d, alpha, sigma, sigma, p).ell;
  }
  const double cap = std::pow(reg_radius, -e);
  return Field::from_function(grid, [&](std::span<const double> x) {
    double r2 = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) r2 += (x[k] - center[k]) * (x[k] - center[k]);
    const double r = std::sqrt(r2);
    double v = preset.amplitude * (r < reg_radius ? cap : std::pow(r, -e));
    if (preset.cutoff_radius > 0.0) v *= psi2(r / preset.cutoff_radius);
    return v;
  });
}

ModelParams build_model(const ExperimentConfig& c, double p, const ForcingSpec& forcing) {
  const GridSpec grid = config_grid(c);
  ModelParams m = make_model(grid, c.d, p, c.alpha);
  m.forcing = forcing;
  m.signed_nonlinearity = c.signed_nonlinearity;
  if (c.reg_radius) m.reg_radius = *c.reg_radius;
  const double sigma = large_time_exponent(forcing);
  m.w = build_data(c.w, grid, c.d, p, c.alpha, sigma, m.reg_radius);
  Field u0 = build_data(c.u0, grid, c.d, p, c.alpha, sigma, m.reg_radius);
  if (c.perturbation > 0.0) {
    std::mt19937_64 rng(c.seed);
    RealVector v(u0.values().begin(), u0.values().end());
    for (double& x : v) {
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      x += c.perturbation * (2.0 * unit - 1.0);
    }
    u0 = Field(grid, std::move(v));
  }
  m.u0 = u0;
  validate(m);
  return m;
}

RunControl build_control(const ExperimentConfig& c) {
  RunControl r;
  r.dt_init = c.dt_init;
  r.blow_threshold = c.blow_threshold;
  r.dt_max = c.dt_max;
  r.boundary_tolerance = c.boundary_tolerance;
  r.tail_tolerance = c.tail_tolerance;
  r.snapshot_interval = c.snapshot_interval;
  return r;
}

}  // namespace fujita::harness
