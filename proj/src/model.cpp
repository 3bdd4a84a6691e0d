#include "hr/model.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace hr {

SystemConfig SystemConfig::make(std::vector<double> omega_pump, double omega_b, double omega_c,
                                double omega_d, cplx g, std::optional<cplx> chi) {
  if (omega_pump.empty()) throw std::invalid_argument("at least one pump mode is required");
  const double s = std::abs(g);
  if (!(s > 0) || !std::isfinite(s)) throw std::invalid_argument("|g| must be positive and finite");
  SystemConfig c;
  c.k = static_cast<int>(omega_pump.size());
  for (double& w : omega_pump) {
    if (!std::isfinite(w)) throw std::invalid_argument("pump frequency is not finite");
    w /= s;
  }
  c.omega_pump = std::move(omega_pump);
  if (!std::isfinite(omega_b) || !std::isfinite(omega_c) || !std::isfinite(omega_d))
    throw std::invalid_argument("mode frequency is not finite");
  c.omega_b = omega_b / s;
  c.omega_c = omega_c / s;
  c.omega_d = omega_d / s;
  c.g = g / s;
  c.chi = chi.value_or(g) / s;
  if (!std::isfinite(std::abs(c.chi))) throw std::invalid_argument("chi is not finite");
  return c;
}

double SystemConfig::omega(int mode) const {
  if (mode >= 0 && mode < k) return omega_pump[mode];
  if (mode == k) return omega_b;
  if (mode == k + 1) return omega_c;
  if (mode == k + 2) return omega_d;
  throw std::out_of_range("mode index");
}

double SystemConfig::pump_sum() const {
  // fixed left-to-right order keeps detunings reproducible
  return std::accumulate(omega_pump.begin(), omega_pump.end(), 0.0);
}

std::string SystemConfig::mode_name(int mode) const {
  if (mode >= 0 && mode < k) return "a" + std::to_string(mode + 1);
  if (mode == k) return "b";
  if (mode == k + 1) return "c";
  if (mode == k + 2) return "d";
  throw std::out_of_range("mode index");
}

int SystemConfig::mode_index(const std::string& name) const {
  if (name == "b") return k;
  if (name == "c") return k + 1;
  if (name == "d") return k + 2;
  if (name.size() >= 2 && name[0] == 'a') {
    int j = 0;
    try {
      j = std::stoi(name.substr(1));
    } catch (...) {
      throw std::invalid_argument("unknown mode '" + name + "'");
    }
    if (j >= 1 && j <= k) return j - 1;
  }
  throw std::invalid_argument("unknown mode '" + name + "'");
}

Detunings detunings(const SystemConfig& cfg) {
  const double s = cfg.pump_sum();
  return {cfg.omega_b + cfg.omega_c - s, s + cfg.omega_c - cfg.omega_d};
}

cplx InitialAmplitudes::at(int mode) const {
  const int k = static_cast<int>(alpha.size());
  if (mode >= 0 && mode < k) return alpha[mode];
  if (mode == k) return beta;
  if (mode == k + 1) return gamma;
  if (mode == k + 2) return delta;
  throw std::out_of_range("mode index");
}

double sigma_l(const InitialAmplitudes& amps) {
  double p1 = 1, p0 = 1;
  for (const cplx& a : amps.alpha) {
    const double n = std::norm(a);
    p1 *= n + 1;
    p0 *= n;
  }
  return p1 - p0;
}

double pump_product_intensity(const InitialAmplitudes& amps, std::optional<int> exclude) {
  const int k = static_cast<int>(amps.alpha.size());
  if (exclude && (*exclude < 0 || *exclude >= k)) throw std::out_of_range("invalid pump exclusion index");
  double p = 1;
  for (int i = 0; i < k; ++i)
    if (!exclude || i != *exclude) p *= std::norm(amps.alpha[i]);
  return p;
}

void validate(const SystemConfig& cfg, const InitialAmplitudes& amps) {
  if (cfg.k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<int>(cfg.omega_pump.size()) != cfg.k) throw std::invalid_argument("omega_pump size differs from k");
  if (static_cast<int>(amps.alpha.size()) != cfg.k)
    throw std::invalid_argument("alpha has " + std::to_string(amps.alpha.size()) + " entries, expected k=" +
                                std::to_string(cfg.k));
  if (!(std::abs(cfg.g) > 0)) throw std::invalid_argument("g must be nonzero");
}

namespace {

cplx read_c(const nlohmann::json& j, const char* key, cplx dflt = {}) {
  if (!j.contains(key)) return dflt;
  const auto& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2) return {v[0].get<double>(), v[1].get<double>()};
  throw std::invalid_argument(std::string("field '") + key + "' must be a number or [re, im]");
}

nlohmann::json write_c(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

nlohmann::json to_json(const SystemConfig& cfg, const InitialAmplitudes& amps) {
  nlohmann::json j;
  j["k"] = cfg.k;
  j["omega_pump"] = cfg.omega_pump;
  j["omega_b"] = cfg.omega_b;
  j["omega_c"] = cfg.omega_c;
  j["omega_d"] = cfg.omega_d;
  j["g"] = write_c(cfg.g);
  j["chi"] = write_c(cfg.chi);
  auto a = nlohmann::json::array();
  for (const cplx& z : amps.alpha) a.push_back(write_c(z));
  j["alpha"] = a;
  j["beta"] = write_c(amps.beta);
  j["gamma"] = write_c(amps.gamma);
  j["delta"] = write_c(amps.delta);
  return j;
}

ConfigFile config_from_json(const nlohmann::json& j) {
  try {
    const int k = j.at("k").get<int>();
    auto wp = j.at("omega_pump").get<std::vector<double>>();
    if (k < 1 || static_cast<int>(wp.size()) != k) throw std::invalid_argument("omega_pump must have k entries");
    std::optional<cplx> chi;
    if (j.contains("chi")) chi = read_c(j, "chi");
    ConfigFile f;
    f.config = SystemConfig::make(wp, j.at("omega_b").get<double>(), j.at("omega_c").get<double>(),
                                  j.at("omega_d").get<double>(), read_c(j, "g", {1, 0}), chi);
    if (j.contains("alpha")) {
      for (const auto& a : j.at("alpha")) {
        if (a.is_number()) f.amps.alpha.emplace_back(a.get<double>(), 0.0);
        else f.amps.alpha.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
      }
    } else {
      f.amps.alpha.assign(k, cplx{});
    }
    f.amps.beta = read_c(j, "beta");
    f.amps.gamma = read_c(j, "gamma");
    f.amps.delta = read_c(j, "delta");
    validate(f.config, f.amps);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config json: ") + e.what());
  }
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config json: ") + e.what());
  }
  return config_from_json(j);
}

}  // namespace hr
