#include "hr/compare.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hr {

double loglog_slope(const std::vector<double>& t, const std::vector<double>& e) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < t.size() && i < e.size(); ++i) {
    if (!(t[i] > 0) || !(e[i] > 0)) continue;
    const double x = std::log(t[i]), y = std::log(e[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double den = n * sxx - sx * sx;
  if (n < 2 || den <= 0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / den;
}

OracleRun oracle_witness_values(const SystemConfig& cfg, const InitialAmplitudes& amps,
                                const std::vector<WitnessRequest>& reqs, const std::vector<double>& times,
                                const CompareOptions& opt) {
  validate(cfg, amps);
  for (const auto& r : reqs) validate_request(r, cfg);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0)) throw std::invalid_argument("oracle times must be non-negative");
    if (i && times[i] < times[i - 1]) throw std::invalid_argument("oracle times must be sorted");
  }
  std::vector<int> cut = opt.cutoffs;
  if (cut.empty()) cut.assign(cfg.modes(), 8);
  if (static_cast<int>(cut.size()) != cfg.modes())
    throw std::invalid_argument("need one cutoff per mode (" + std::to_string(cfg.modes()) + ")");

  FockBasis basis(cut);
  Propagator prop(cfg, basis);
  const double bound = opt.strict_tail ? opt.tail_bound : std::numeric_limits<double>::infinity();
  FockState s = coherent_state(amps, basis, bound);
  EvolveOptions eo = opt.evolve;
  eo.tail_bound = bound;
  eo.throw_on_tail = opt.strict_tail;

  OracleRun run;
  run.dim = basis.dim;
  run.max_tail = s.tail_mass;
  double now = 0;
  for (double t : times) {
    if (t > now) s = prop.evolve(s, t - now, eo);
    now = t;
    run.max_tail = std::max(run.max_tail, s.tail_mass);
    OracleMoments mom(s, prop);
    std::vector<double> row(2 * reqs.size(), 0.0);
    for (std::size_t w = 0; w < reqs.size(); ++w) {
      const WitnessValue v = witnesses_from_moments(mom, reqs[w]);
      row[2 * w] = v.primary;
      row[2 * w + 1] = v.secondary.value_or(0.0);
    }
    run.values.push_back(std::move(row));
  }
  return run;
}

CompareResult compare_with_oracle(const SystemConfig& cfg, const InitialAmplitudes& amps,
                                  const std::vector<WitnessRequest>& reqs, const std::vector<double>& times,
                                  const CompareOptions& opt) {
  CompareResult res;
  res.oracle = oracle_witness_values(cfg, amps, reqs, times, opt);
  for (std::size_t w = 0; w < reqs.size(); ++w) {
    const bool two = reqs[w].two_branch();
    for (int b = 0; b < (two ? 2 : 1); ++b) {
      std::string id = reqs[w].id(cfg);
      if (two) id += b == 0 ? "/I" : "/II";
      std::vector<double> err;
      const std::size_t first = res.rows.size();
      for (std::size_t i = 0; i < times.size(); ++i) {
        const WitnessValue c = evaluate_witness(reqs[w], cfg, amps, times[i], opt.form);
        CompareRow row;
        row.t = times[i];
        row.witness_id = id;
        row.closed_form = b == 0 ? c.primary : c.secondary.value_or(0.0);
        row.oracle = res.oracle.values[i][2 * w + b];
        row.abs_residual = std::abs(row.closed_form - row.oracle);
        err.push_back(row.abs_residual);
        res.rows.push_back(std::move(row));
      }
      const double slope = loglog_slope(times, err);
      res.slopes[id] = slope;
      for (std::size_t i = first; i < res.rows.size(); ++i) res.rows[i].slope_estimate = slope;
    }
  }
  return res;
}

namespace {

std::string num(double v) {
  if (std::isnan(v)) return {};
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, p) : std::string{};
}

}  // namespace

std::string to_csv(const CompareResult& r) {
  std::string o = "t,witness_id,closed_form,oracle,abs_residual,slope_estimate\r\n";
  for (const auto& x : r.rows)
    o += num(x.t) + ',' + x.witness_id + ',' + num(x.closed_form) + ',' + num(x.oracle) + ',' + num(x.abs_residual) +
         ',' + num(x.slope_estimate) + "\r\n";
  return o;
}

}  // namespace hr
