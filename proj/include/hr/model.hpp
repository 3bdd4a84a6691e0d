#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hr {

using cplx = std::complex<double>;

// Mode layout used everywhere: pumps 0..k-1, then Stokes b, vibration c,
// anti-Stokes d.
struct SystemConfig {
  int k = 0;
  std::vector<double> omega_pump;
  double omega_b = 0, omega_c = 0, omega_d = 0;
  cplx g{1, 0};
  cplx chi{1, 0};

  // Rescales every frequency and coupling by |g| so that |g| = 1 and all
  // time arguments are gt. chi defaults to g.
  static SystemConfig make(std::vector<double> omega_pump, double omega_b, double omega_c,
                           double omega_d, cplx g = {1, 0}, std::optional<cplx> chi = {});

  int modes() const { return k + 3; }
  int stokes() const { return k; }
  int vibration() const { return k + 1; }
  int antistokes() const { return k + 2; }
  double omega(int mode) const;
  double pump_sum() const;
  std::string mode_name(int mode) const;
  int mode_index(const std::string& name) const;  // throws std::invalid_argument
};

struct Detunings {
  double delta1 = 0;  // omega_b + omega_c - sum(omega_i)
  double delta2 = 0;  // sum(omega_i) + omega_c - omega_d
};

Detunings detunings(const SystemConfig& cfg);

struct InitialAmplitudes {
  std::vector<cplx> alpha;
  cplx beta{}, gamma{}, delta{};

  cplx at(int mode) const;  // same mode layout as SystemConfig
  int modes() const { return static_cast<int>(alpha.size()) + 3; }
};

// <A_l> = prod(|a_i|^2 + 1) - prod |a_i|^2, the multi-pump ordering term.
double sigma_l(const InitialAmplitudes& amps);

// prod |alpha_i|^2 over pumps, optionally skipping one (0-based) pump index.
double pump_product_intensity(const InitialAmplitudes& amps, std::optional<int> exclude = {});

void validate(const SystemConfig& cfg, const InitialAmplitudes& amps);

struct ConfigFile {
  SystemConfig config;
  InitialAmplitudes amps;
};

nlohmann::json to_json(const SystemConfig& cfg, const InitialAmplitudes& amps);
ConfigFile config_from_json(const nlohmann::json& j);
ConfigFile load_config(const std::string& path);

}  // namespace hr
