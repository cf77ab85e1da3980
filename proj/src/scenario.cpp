#include "semiwig/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "semiwig/error.hpp"
#include "semiwig/oscillator.hpp"
#include "semiwig/specfun.hpp"

namespace semiwig {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::config, std::string("field '") + key + "': " + e.what());
  }
}

const char* kKeys[] = {"eps", "modes", "datum", "n_max", "grid", "backend", "times", "prefix"};
const char* kDatumKeys[] = {"amplitude", "phase", "center", "width", "coefficients"};
const char* kGridKeys[] = {"x_min", "x_max", "p_min", "p_max", "nx", "np"};

template <std::size_t N>
void reject_unknown(const json& j, const char* (&keys)[N], const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw Error(Errc::config, std::string("unknown key '") + it.key() + "' in " + where);
  }
}

}  // namespace

void Scenario::validate() const {
  if (!(eps > 0.0 && eps <= 1.0)) throw Error(Errc::config, "eps must lie in (0, 1]");
  for (int n : modes)
    if (n < 0 || n > kNmax) throw Error(Errc::config, "mode index outside [0, 200]");
  if (n_max < -1 || n_max > kNmax) throw Error(Errc::config, "n_max outside [-1, 200]");
  try {
    grid.validate();
  } catch (const Error& e) {
    throw Error(Errc::config, e.what());
  }
  Backend b = parse_backend(backend);
  for (double t : times)
    if (!(t >= 0.0) || !std::isfinite(t)) throw Error(Errc::config, "times must be finite and nonnegative");
  if (prefix.empty() || prefix.find('/') != std::string::npos) throw Error(Errc::config, "prefix must be a bare name");
  if (datum) {
    const DatumSpec& d = *datum;
    if (d.amplitude != "bump" && d.amplitude != "gaussian" && d.amplitude != "one")
      throw Error(Errc::config, "datum.amplitude must be bump, gaussian or one");
    if (d.phase != "quad_plus" && d.phase != "quad_minus" && d.phase != "cubic" && d.phase != "custom")
      throw Error(Errc::config, "datum.phase must be quad_plus, quad_minus, cubic or custom");
    if (d.phase == "custom" && (d.coefficients.empty() || d.coefficients.size() > 6))
      throw Error(Errc::config, "custom phase needs 1 to 6 coefficients (degree <= 5)");
    if (!(d.width > 0.0)) throw Error(Errc::config, "datum.width must be positive");
    make_datum(d, eps).validate();
  }
  if (b == Backend::airy_approx) {
    for (int n : modes)
      if (n < kAiryNmin) throw Error(Errc::capability, "airy backend refuses modes below 10; use hybrid");
  }
}

json to_json(const Scenario& s) {
  json j;
  j["eps"] = s.eps;
  j["modes"] = s.modes;
  if (s.datum) {
    const DatumSpec& d = *s.datum;
    j["datum"] = {{"amplitude", d.amplitude}, {"phase", d.phase}, {"center", d.center}, {"width", d.width},
                  {"coefficients", d.coefficients}};
  } else {
    j["datum"] = nullptr;
  }
  j["n_max"] = s.n_max;
  j["grid"] = {{"x_min", s.grid.x_min}, {"x_max", s.grid.x_max}, {"p_min", s.grid.p_min},
               {"p_max", s.grid.p_max}, {"nx", s.grid.nx},       {"np", s.grid.np}};
  j["backend"] = s.backend;
  j["times"] = s.times;
  j["prefix"] = s.prefix;
  return j;
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::config, "scenario must be an object");
  reject_unknown(j, kKeys, "scenario");
  Scenario s;
  s.eps = field(j, "eps", s.eps);
  s.modes = field(j, "modes", s.modes);
  s.n_max = field(j, "n_max", s.n_max);
  s.backend = field(j, "backend", s.backend);
  s.times = field(j, "times", s.times);
  s.prefix = field(j, "prefix", s.prefix);
  if (auto it = j.find("grid"); it != j.end() && !it->is_null()) {
    reject_unknown(*it, kGridKeys, "grid");
    PhaseSpaceGrid& g = s.grid;
    g.x_min = field(*it, "x_min", g.x_min);
    g.x_max = field(*it, "x_max", g.x_max);
    g.p_min = field(*it, "p_min", g.p_min);
    g.p_max = field(*it, "p_max", g.p_max);
    g.nx = field(*it, "nx", g.nx);
    g.np = field(*it, "np", g.np);
  }
  if (auto it = j.find("datum"); it != j.end() && !it->is_null()) {
    reject_unknown(*it, kDatumKeys, "datum");
    DatumSpec d;
    d.amplitude = field(*it, "amplitude", d.amplitude);
    d.phase = field(*it, "phase", d.phase);
    d.center = field(*it, "center", d.center);
    d.width = field(*it, "width", d.width);
    d.coefficients = field(*it, "coefficients", d.coefficients);
    s.datum = d;
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config, "cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(Errc::config, std::string("config parse error: ") + e.what());
  }
  return scenario_from_json(j);
}

InitialDatum make_datum(const DatumSpec& d, double eps) {
  InitialDatum u;
  u.eps = eps;
  double c = d.center, w = d.width;
  if (d.amplitude == "bump") {
    u.a0 = [c, w](double x) {
      double s = (x - c) / w;
      return std::fabs(s) < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0;
    };
    u.support = {c - w, c + w};
  } else if (d.amplitude == "gaussian") {
    u.a0 = [c, w](double x) { return std::exp(-0.5 * (x - c) * (x - c) / (w * w)); };
    u.support = {c - 10.0 * w, c + 10.0 * w};
  } else {
    u.a0 = [](double) { return 1.0; };
    u.support = {c - w, c + w};
  }
  if (d.phase == "quad_plus")
    u.s0 = phase_quadratic(1.0);
  else if (d.phase == "quad_minus")
    u.s0 = phase_quadratic(-1.0);
  else if (d.phase == "cubic")
    u.s0 = phase_cubic();
  else
    u.s0 = phase_polynomial(d.coefficients);
  return u;
}

}  // namespace semiwig
