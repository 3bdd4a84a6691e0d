#include "hr/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>
#include <stdexcept>
#include <thread>

namespace hr {

std::vector<double> TimeGrid::times() const {
  if (points < 1) throw std::invalid_argument("time grid needs at least one point");
  if (!(stop >= start) || !std::isfinite(start) || !std::isfinite(stop))
    throw std::invalid_argument("time grid needs finite start <= stop");
  if (start < 0) throw std::invalid_argument("time grid must start at t >= 0");
  std::vector<double> t(points);
  if (points == 1) {
    t[0] = start;
    return t;
  }
  const double h = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) t[i] = start + i * h;
  t.back() = stop;
  return t;
}

SystemConfig optical_config(int k) {
  // |g| = 1 units; sum of pumps 1000.0001e5, detunings -10 and 19
  const double wb = 999.999e5, wc = 0.001e5, wd = 1000.00091e5;
  switch (k) {
    case 1: return SystemConfig::make({1000.0001e5}, wb, wc, wd);
    case 2: return SystemConfig::make({600.0001e5, 400e5}, wb, wc, wd);
    case 3: return SystemConfig::make({100.0001e5, 700e5, 200e5}, wb, wc, wd);
    default: throw std::invalid_argument("optical presets exist for k = 1, 2, 3");
  }
}

Scenario preset(const std::string& name, int k) {
  Scenario s;
  s.name = name;
  if (name == "certification") {
    // small amplitudes and O(10) frequencies so a truncated Fock basis can
    // reproduce the dynamics; detunings -10 and 19 as in the other presets
    if (k != 2) throw std::invalid_argument("the certification preset is defined for k = 2");
    s.config = SystemConfig::make({18, 12}, 18, 2, 13);
    s.amps.alpha = {0.6, std::polar(0.6, std::numbers::pi / 4)};
    s.amps.beta = 0.4;
    s.amps.gamma = 0.1;
    s.amps.delta = 0.2;
    s.grid = TimeGrid{1e-3, 1e-2, 10};
    return s;
  }
  s.config = optical_config(k);
  s.amps.alpha.assign(k, cplx{10, 0});
  if (name == "stimulated") {
    s.amps.beta = 8;
    s.amps.gamma = 0.01;
    s.amps.delta = 1;
  } else if (name == "partial") {
    s.amps.beta = 8;
  } else if (name != "spontaneous") {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return s;
}

void apply_parameter(Scenario& s, const std::string& path, double v) {
  static const std::regex alpha_re(R"(^alpha([0-9]+)\.(abs|phase)$)");
  static const std::regex pump_re(R"(^omega_pump([0-9]+)(\.fixed_sum)?$)");
  if (!std::isfinite(v)) throw std::invalid_argument("sweep value is not finite");
  std::smatch m;
  auto set_abs = [&](cplx& z) { z = std::polar(v, z == cplx{} ? 0.0 : std::arg(z)); };
  if (std::regex_match(path, m, alpha_re)) {
    const int j = std::stoi(m[1]) - 1;
    if (j < 0 || j >= s.config.k) throw std::invalid_argument("no pump mode in '" + path + "'");
    cplx& a = s.amps.alpha[j];
    if (m[2] == "abs") set_abs(a);
    else a = std::polar(std::abs(a), v);
  } else if (path == "beta.abs") {
    set_abs(s.amps.beta);
  } else if (path == "gamma.abs") {
    set_abs(s.amps.gamma);
  } else if (path == "delta.abs") {
    set_abs(s.amps.delta);
  } else if (std::regex_match(path, m, pump_re)) {
    const int j = std::stoi(m[1]) - 1;
    auto& w = s.config.omega_pump;
    if (j < 0 || j >= s.config.k) throw std::invalid_argument("no pump mode in '" + path + "'");
    if (m[2].matched) {
      if (s.config.k < 2) throw std::invalid_argument("fixed_sum sweep needs at least two pumps");
      const double sum = s.config.pump_sum();
      const int partner = j == s.config.k - 1 ? 0 : s.config.k - 1;
      double others = 0;
      for (int i = 0; i < s.config.k; ++i)
        if (i != j && i != partner) others += w[i];
      w[j] = v;
      w[partner] = sum - v - others;
    } else {
      w[j] = v;
    }
  } else if (path == "omega_b") {
    s.config.omega_b = v;
  } else if (path == "omega_c") {
    s.config.omega_c = v;
  } else if (path == "omega_d") {
    s.config.omega_d = v;
  } else {
    throw std::invalid_argument("unknown sweep parameter '" + path + "'");
  }
}

namespace {

std::vector<WitnessRequest> parse_all(const std::vector<std::string>& ids, const SystemConfig& cfg) {
  std::vector<WitnessRequest> v;
  for (const auto& id : ids) v.push_back(WitnessRequest::parse(id, cfg));
  return v;
}

}  // namespace

FigurePreset figure_preset(int id) {
  FigurePreset f;
  f.id = id;
  const double half_pi = std::numbers::pi / 2;
  auto stim = [](int k) { return preset("stimulated", k); };
  switch (id) {
    case 2:
      f.title = "Quadrature squeezing in the pump modes (k = 2)";
      f.scenario = stim(2);
      f.scenario.witnesses = parse_all({"sq:a1", "sq:a2"}, f.scenario.config);
      f.sweep = SweepSpec{"alpha2.abs", {10, 12}};
      break;
    case 3:
      f.title = "Intermodal squeezing, pump with Stokes, vibration and anti-Stokes (k = 2)";
      f.scenario = stim(2);
      f.scenario.witnesses =
          parse_all({"psq:a1-b", "psq:a2-b", "psq:a1-c", "psq:a2-c", "psq:a1-d", "psq:a2-d"}, f.scenario.config);
      break;
    case 4:
      f.title = "Amplitude-powered squeezing in a1 (k = 2)";
      f.scenario = stim(2);
      f.scenario.witnesses = parse_all({"asq1:a1", "asq2:a1", "asq3:a1"}, f.scenario.config);
      f.display_scale = {{"asq1:a1", 1e4}, {"asq2:a1", 1e2}};
      break;
    case 5:
      f.title = "Higher-order and intermodal antibunching (k = 2)";
      f.scenario = stim(2);
      f.scenario.witnesses =
          parse_all({"ab2:a1", "ab3:a1", "pab:a1-a2", "pab:a1-b", "pab:a1-d", "pab:c-d", "pab:b-d"}, f.scenario.config);
      f.display_scale = {{"ab2:a1", 1e4}, {"ab3:a1", 50}, {"pab:a1-a2", 10}, {"pab:a1-b", 10},
                         {"pab:a1-d", 100}, {"pab:c-d", 100}, {"pab:b-d", 10}};
      break;
    case 6:
      f.title = "HZ entanglement, pump-pump and pump-vibration (k = 2)";
      f.scenario = stim(2);
      f.scenario.witnesses = parse_all({"hz11:a1-a2", "hz12:a1-a2", "hz21:a1-a2", "hz11:a1-c", "hz12:a1-c",
                                        "hz11:a1-d", "hz12:a1-d"},
                                       f.scenario.config);
      f.display_scale = {{"hz11:a1-a2", 1e4}, {"hz12:a1-a2", 1e2}, {"hz21:a1-a2", 1e2}, {"hz11:a1-c", 100},
                         {"hz11:a1-d", 100}, {"hz12:a1-d", 100}};
      f.sweep = SweepSpec{"alpha1.phase", {half_pi, -half_pi}};
      break;
    case 7:
      f.title = "HZ entanglement, Stokes-anti-Stokes and Stokes-vibration (k = 2)";
      f.scenario = stim(2);
      f.scenario.witnesses = parse_all({"hz11:b-d", "hz12:b-d", "hz11:b-c", "hz12:b-c", "hz22:b-c"}, f.scenario.config);
      f.display_scale = {{"hz11:b-d", 100}, {"hz12:b-d", 50}, {"hz11:b-c", 100}, {"hz12:b-c", 1e5}, {"hz22:b-c", 1e3}};
      f.sweep = SweepSpec{"alpha1.phase", {half_pi, -half_pi}};
      break;
    case 8: {
      f.title = "Spontaneous case, pump pair; pump-frequency sweep of X_a1 (k = 2)";
      f.scenario = preset("spontaneous", 2);
      f.scenario.witnesses = parse_all({"psq:a1-a2", "pab:a1-a2", "hz11:a1-a2"}, f.scenario.config);
      Scenario base = stim(2);
      base.witnesses = parse_all({"sq:a1"}, base.config);
      SweepSpec sw{"omega_pump1.fixed_sum", {}};
      for (int i = 0; i <= 15; ++i) sw.values.push_back(35e6 + 2e6 * i);
      f.sweep = sw;
      f.sweep_base = base;
      break;
    }
    default: throw std::invalid_argument("unknown figure id " + std::to_string(id) + " (expected 2..8)");
  }
  return f;
}

// Evaluation ---------------------------------------------------------------

namespace {

template <class F>
void parallel_chunks(std::size_t n, int threads, F&& work) {
  const std::size_t T = std::clamp<std::size_t>(threads < 1 ? 1 : threads, 1, std::max<std::size_t>(n, 1));
  if (T == 1) {
    work(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + T - 1) / T;
  for (std::size_t i = 0; i < T; ++i) {
    const std::size_t lo = i * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&work, lo, hi] { work(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

DenseTable run_dense(const CompiledWitnessSet& set, const std::vector<double>& times, int threads) {
  DenseTable d;
  d.t = times;
  d.width = set.size();
  d.values.assign(times.size() * d.width * 2, 0.0);
  parallel_chunks(times.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) set.evaluate(times[i], d.values.data() + i * d.width * 2);
  });
  return d;
}

DenseTable run_dense_printed(const Scenario& s, const std::vector<double>& times, int threads) {
  DenseTable d;
  d.t = times;
  d.width = s.witnesses.size();
  d.values.assign(times.size() * d.width * 2, 0.0);
  for (const auto& r : s.witnesses) validate_request(r, s.config);
  parallel_chunks(times.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const CoefficientTables c = coefficients(s.config, times[i]);
      for (std::size_t w = 0; w < d.width; ++w) {
        const WitnessValue v = printed_witness(s.witnesses[w], s.config, c, s.amps);
        d.values[(i * d.width + w) * 2] = v.primary;
        d.values[(i * d.width + w) * 2 + 1] = v.secondary.value_or(0.0);
      }
    }
  });
  return d;
}

WitnessTable run_scenario(const Scenario& s, int threads) {
  validate(s.config, s.amps);
  if (s.witnesses.empty()) throw std::invalid_argument("scenario has no witnesses");
  const std::vector<double> times = s.grid.times();
  DenseTable d;
  if (s.form == WitnessForm::derived) {
    const CompiledWitnessSet set(s.config, s.amps, s.witnesses);
    d = run_dense(set, times, threads);
  } else {
    d = run_dense_printed(s, times, threads);
  }
  WitnessTable t;
  t.title = s.name;
  t.rows.reserve(times.size() * d.width);
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (std::size_t w = 0; w < d.width; ++w) {
      const WitnessRequest& r = s.witnesses[w];
      TableRow row;
      row.t = times[i];
      row.witness_id = r.id(s.config);
      for (std::size_t q = 0; q < r.modes.size(); ++q) row.modes += (q ? "," : "") + s.config.mode_name(r.modes[q]);
      row.m = r.m;
      row.n = r.n;
      row.value_primary = d.values[(i * d.width + w) * 2];
      if (r.two_branch()) row.value_secondary = d.values[(i * d.width + w) * 2 + 1];
      row.nonclassical = row.value_primary < 0 || (row.value_secondary && *row.value_secondary < 0);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

WitnessTable run_sweep(const SweepSpec& sweep, const Scenario& s, int threads) {
  if (sweep.values.empty()) throw std::invalid_argument("sweep value list is empty");
  // validate every point before computing anything
  std::vector<Scenario> points;
  for (double v : sweep.values) {
    Scenario p = s;
    apply_parameter(p, sweep.path, v);
    validate(p.config, p.amps);
    points.push_back(std::move(p));
  }
  WitnessTable out;
  out.title = s.name + " sweep " + sweep.path;
  out.sweep_path = sweep.path;
  for (std::size_t i = 0; i < points.size(); ++i) {
    WitnessTable t = run_scenario(points[i], threads);
    for (auto& r : t.rows) {
      r.sweep_value = sweep.values[i];
      out.rows.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<SweepExtremum> sweep_extrema(const WitnessTable& t) {
  std::vector<SweepExtremum> out;
  for (const auto& r : t.rows) {
    const double sv = r.sweep_value.value_or(0.0);
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const SweepExtremum& e) { return e.sweep_value == sv && e.witness_id == r.witness_id; });
    if (it == out.end()) {
      out.push_back({sv, r.witness_id, 0.0, 0.0});
      it = out.end() - 1;
    }
    it->min_primary = std::min(it->min_primary, r.value_primary);
    if (r.value_secondary) it->min_secondary = std::min(it->min_secondary, *r.value_secondary);
  }
  return out;
}

}  // namespace hr
