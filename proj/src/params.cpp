#include "d2d/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_io.hpp"

namespace d2d {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SystemParams validate(const SystemParams& p) {
  require(std::isfinite(p.p_a) && p.p_a > 0, "p_a must be > 0 (got " + num(p.p_a) + ")");
  require(std::isfinite(p.p_b) && p.p_b > 0, "p_b must be > 0 (got " + num(p.p_b) + ")");
  require(std::isfinite(p.zeta_a) && p.zeta_a >= 0,
          "zeta_a must be >= 0 (got " + num(p.zeta_a) + ")");
  require(std::isfinite(p.xi) && p.xi >= 0, "xi must be >= 0 (got " + num(p.xi) + ")");
  require(p.l_a >= 0 && p.l_a <= 1, "l_a must be in [0,1] (got " + num(p.l_a) + ")");
  require(p.l_b >= 0 && p.l_b <= 1, "l_b must be in [0,1] (got " + num(p.l_b) + ")");
  require(p.alpha > 0 && p.alpha <= 1,
          "alpha must be in (0,1] (got " + num(p.alpha) + "); for the Poisson limit "
          "use the dedicated PPP sampler instead of alpha = 0");
  require(p.window_radius > 0,
          "window_radius must be > 0 (got " + num(p.window_radius) + ")");
  require(p.mu > 2, "mu must be > 2 for a finite far-field aggregate (got " +
                        num(p.mu) + ")");
  require(p.m >= 0.5, "m must be >= 0.5 (got " + num(p.m) + ")");
  require(p.d > 0, "d must be > 0 (got " + num(p.d) + ")");
  require(p.beta > 0 && p.beta <= 1, "beta must be in (0,1] (got " + num(p.beta) + ")");
  require(p.eta > 0 && p.eta < 1, "eta must be in (0,1) (got " + num(p.eta) + ")");
  require(p.delta > 0 && p.delta <= 1,
          "delta must be in (0,1] (got " + num(p.delta) + ")");
  require(p.omega > 0 && p.omega < 1,
          "omega must be in (0,1) (got " + num(p.omega) + ")");
  require(p.rho_b >= 0, "rho_b must be >= 0 (got " + num(p.rho_b) + ")");
  require(p.rho_h >= 0, "rho_h must be >= 0 (got " + num(p.rho_h) + ")");
  require(p.tau_b >= 0, "tau_b must be >= 0 (got " + num(p.tau_b) + ")");
  require(p.tau_h >= 0, "tau_h must be >= 0 (got " + num(p.tau_h) + ")");
  require(p.sigma2 > 0, "sigma2 must be > 0 (got " + num(p.sigma2) + ")");
  require(p.t_b >= 0, "t_b must be >= 0 (got " + num(p.t_b) + ")");
  return p;
}

Thresholds derived_thresholds(const SystemParams& p) {
  return Thresholds{p.rho_b / (p.beta * p.eta), p.rho_h / (p.omega * p.beta)};
}

double db_to_ratio(double db) { return std::pow(10.0, db / 10.0); }

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double ratio_to_db(double ratio) { return 10.0 * std::log10(ratio); }

namespace detail {

nlohmann::json params_to_json(const SystemParams& p) {
  return nlohmann::json{
      {"p_a", p.p_a},       {"p_b", p.p_b},
      {"zeta_a", p.zeta_a}, {"xi", p.xi},
      {"l_a", p.l_a},       {"l_b", p.l_b},
      {"alpha", p.alpha},   {"window_radius", p.window_radius},
      {"mu", p.mu},         {"m", p.m},
      {"d", p.d},           {"beta", p.beta},
      {"eta", p.eta},       {"delta", p.delta},
      {"omega", p.omega},   {"rho_b", p.rho_b},
      {"rho_h", p.rho_h},   {"tau_b", p.tau_b},
      {"tau_h", p.tau_h},   {"sigma2", p.sigma2},
      {"t_b", p.t_b}};
}

SystemParams params_from_json(const nlohmann::json& j, SystemParams base) {
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  SystemParams p = base;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) {
      throw ConfigError("config key '" + key + "' must be a number");
    }
    const double v = value.get<double>();
    if (key == "p_a") p.p_a = v;
    else if (key == "p_b") p.p_b = v;
    else if (key == "zeta_a") p.zeta_a = v;
    else if (key == "xi") p.xi = v;
    else if (key == "l_a") p.l_a = v;
    else if (key == "l_b") p.l_b = v;
    else if (key == "alpha") p.alpha = v;
    else if (key == "window_radius" || key == "R") p.window_radius = v;
    else if (key == "mu") p.mu = v;
    else if (key == "m") p.m = v;
    else if (key == "d") p.d = v;
    else if (key == "beta") p.beta = v;
    else if (key == "eta") p.eta = v;
    else if (key == "delta") p.delta = v;
    else if (key == "omega") p.omega = v;
    else if (key == "rho_b") p.rho_b = v;
    else if (key == "rho_h") p.rho_h = v;
    else if (key == "tau_b") p.tau_b = v;
    else if (key == "tau_b_db") p.tau_b = db_to_ratio(v);
    else if (key == "tau_h") p.tau_h = v;
    else if (key == "tau_h_db") p.tau_h = db_to_ratio(v);
    else if (key == "sigma2") p.sigma2 = v;
    else if (key == "sigma2_dbm") p.sigma2 = dbm_to_watts(v);
    else if (key == "t_b") p.t_b = v;
    else throw ConfigError("unknown config key '" + key + "'");
  }
  return p;
}

}  // namespace detail

SystemParams params_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return validate(detail::params_from_json(j));
}

SystemParams params_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return params_from_json_text(buf.str());
}

}  // namespace d2d
