// hrtool: witness tables, sweeps, figure presets, identity checks and oracle
// comparison from the command line.
//
// exit codes: 0 ok, 2 bad input / precondition, 3 identity failure,
//             4 Fock truncation exceeded

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hr/compare.hpp"
#include "hr/scenario.hpp"

namespace {

constexpr int kOk = 0, kPrecondition = 2, kIdentity = 3, kTruncation = 4;

struct Common {
  std::string config;
  std::string preset = "stimulated";
  int k = 2;
  std::vector<std::string> witnesses;
  std::string form = "derived";
  std::optional<double> t_start, t_stop;
  std::optional<int> t_points;
  int threads = 1;
  std::string format = "csv";
  std::string out;
};

void add_io(CLI::App* c, Common& o, bool witness_opts = true) {
  c->add_option("--config", o.config, "JSON system/amplitude file (overrides --preset)");
  c->add_option("--preset", o.preset, "stimulated | spontaneous | partial | certification");
  c->add_option("--k", o.k, "number of pump modes for the preset")->check(CLI::Range(1, 3));
  if (witness_opts) {
    c->add_option("--witness,-w", o.witnesses, "witness ids, e.g. sq:a1 hz12:a1-c (default: all)");
    c->add_option("--form", o.form, "derived | printed")->check(CLI::IsMember({"derived", "printed"}));
  }
  c->add_option("--t-start", o.t_start, "first gt");
  c->add_option("--t-stop", o.t_stop, "last gt");
  c->add_option("--t-points", o.t_points, "number of instants");
  c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  c->add_option("--format", o.format, "csv | json | svg")->check(CLI::IsMember({"csv", "json", "svg"}));
  c->add_option("--out,-o", o.out, "output file (default stdout)");
}

hr::Scenario make_scenario(const Common& o) {
  hr::Scenario s;
  if (!o.config.empty()) {
    const hr::ConfigFile f = hr::load_config(o.config);
    s.name = "custom";
    s.config = f.config;
    s.amps = f.amps;
    if (s.amps.alpha.empty()) s.amps.alpha.assign(s.config.k, hr::cplx{});
  } else {
    s = hr::preset(o.preset, o.k);
  }
  if (o.t_start) s.grid.start = *o.t_start;
  if (o.t_stop) s.grid.stop = *o.t_stop;
  if (o.t_points) s.grid.points = *o.t_points;
  s.form = o.form == "printed" ? hr::WitnessForm::printed : hr::WitnessForm::derived;
  if (o.witnesses.empty()) {
    s.witnesses = hr::witness_catalog(s.config);
  } else {
    for (const auto& id : o.witnesses) s.witnesses.push_back(hr::WitnessRequest::parse(id, s.config));
  }
  return s;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + out + "'");
  f << text;
}

std::string render(const hr::WitnessTable& t, const std::string& format) {
  if (format == "json") return hr::to_json_text(t);
  if (format == "svg") return hr::to_svg(t);
  return hr::to_csv(t);
}

std::vector<double> parse_values(const std::vector<double>& list, const std::string& range) {
  std::vector<double> v = list;
  if (!range.empty()) {
    // start:stop:step, inclusive of stop within rounding
    std::stringstream ss(range);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
      throw std::invalid_argument("--range wants start:stop:step");
    const double lo = std::stod(a), hi = std::stod(b), st = std::stod(c);
    if (!(st > 0) || hi < lo) throw std::invalid_argument("--range needs step > 0 and stop >= start");
    const auto n = static_cast<long>(std::floor((hi - lo) / st + 1e-9));
    for (long i = 0; i <= n; ++i) v.push_back(lo + st * static_cast<double>(i));
  }
  if (v.empty()) throw std::invalid_argument("sweep needs at least one value (--values or --range)");
  return v;
}

int run_identities(const Common& o, const std::string& brackets, double tol) {
  const hr::Scenario s = make_scenario(o);
  const auto form = brackets == "printed" ? hr::BracketForm::printed : hr::BracketForm::corrected;
  double etcr = 0, cons = 0;
  std::string worst_e, worst_c;
  for (double t : s.grid.times()) {
    const auto c = hr::coefficients(s.config, t);
    for (const auto& r : hr::check_etcr(c, form).residuals)
      if (r.rel() > etcr) etcr = r.rel(), worst_e = r.name;
    for (const auto& r : hr::check_constants(c, form).residuals)
      if (r.rel() > cons) cons = r.rel(), worst_c = r.name;
  }
  std::cout << "etcr      max_rel " << etcr << (worst_e.empty() ? "" : "  (" + worst_e + ")") << "\n";
  std::cout << "constants max_rel " << cons << (worst_c.empty() ? "" : "  (" + worst_c + ")") << "\n";
  // step well below the fastest period; the residual is quoted relative to
  // the largest derivative magnitude
  const double tm = s.grid.times().back() > 0 ? s.grid.times().back() : 1.0;
  double wmax = 0;
  for (int m = 0; m < s.config.modes(); ++m) wmax = std::max(wmax, std::abs(s.config.omega(m)));
  const double h = std::min(1e-3 * tm, 0.02 / std::max(wmax, 1.0));
  auto rel = [](const std::vector<hr::OdeResidual>& v) {
    double r = 0;
    for (const auto& x : v) r = std::max(r, x.scale > 0 ? x.abs / x.scale : x.abs);
    return r;
  };
  const double r1 = rel(hr::verify_odes(s.config, tm, h));
  const double r2 = rel(hr::verify_odes(s.config, tm, h / 2));
  std::cout << "ode       rel residual " << r1 << " -> " << r2 << "  ratio " << (r2 > 0 ? r1 / r2 : 0.0) << "\n";
  const bool ok = etcr < tol && cons < tol;
  std::cout << (ok ? "identities hold" : "identity failure") << " at tol " << tol << "\n";
  return ok ? kOk : kIdentity;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyper-Raman nonclassicality witnesses"};
  app.require_subcommand(1);

  Common wit;
  auto* c_wit = app.add_subcommand("witness", "witness table over a time grid");
  add_io(c_wit, wit);

  Common sw;
  std::string sw_param, sw_range;
  std::vector<double> sw_values;
  auto* c_sw = app.add_subcommand("sweep", "witness tables over a swept parameter");
  add_io(c_sw, sw);
  c_sw->add_option("--param", sw_param, "alpha<j>.abs|.phase, beta.abs, omega_pump<j>[.fixed_sum], omega_b, ...")
      ->required();
  c_sw->add_option("--values", sw_values, "comma separated values")->delimiter(',');
  c_sw->add_option("--range", sw_range, "start:stop:step");

  Common fig;
  int fig_id = 0;
  auto* c_fig = app.add_subcommand("figure", "preset figure data (2..8)");
  c_fig->add_option("id", fig_id, "figure number")->required();
  c_fig->add_option("--t-start", fig.t_start, "first gt");
  c_fig->add_option("--t-stop", fig.t_stop, "last gt");
  c_fig->add_option("--t-points", fig.t_points, "number of instants");
  c_fig->add_option("--threads", fig.threads, "worker threads")->check(CLI::PositiveNumber);
  c_fig->add_option("--format", fig.format, "csv | json | svg")->check(CLI::IsMember({"csv", "json", "svg"}));
  c_fig->add_option("--out,-o", fig.out, "output file (default stdout)");
  c_fig->add_option("--form", fig.form, "derived | printed")->check(CLI::IsMember({"derived", "printed"}));

  Common ids;
  std::string brackets = "corrected";
  double tol = 1e-12;
  auto* c_ids = app.add_subcommand("identities", "commutator and constant-of-motion checks");
  add_io(c_ids, ids, false);
  c_ids->add_option("--brackets", brackets, "corrected | printed")->check(CLI::IsMember({"corrected", "printed"}));
  c_ids->add_option("--tol", tol, "relative tolerance");

  Common orc;
  orc.preset = "certification";
  std::vector<int> cutoffs;
  double tail_bound = 1e-10;
  bool allow_tail = false;
  auto* c_orc = app.add_subcommand("oracle-compare", "closed forms against the truncated Fock-space oracle");
  add_io(c_orc, orc);
  c_orc->add_option("--cutoffs", cutoffs, "max occupation per mode, e.g. 8,8,8,8,8")->delimiter(',');
  c_orc->add_option("--tail-bound", tail_bound, "largest allowed boundary-shell population");
  c_orc->add_flag("--allow-tail", allow_tail, "report instead of failing when the tail bound is exceeded");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kPrecondition;
  }

  try {
    if (*c_wit) {
      const hr::Scenario s = make_scenario(wit);
      emit(render(hr::run_scenario(s, wit.threads), wit.format), wit.out);
    } else if (*c_sw) {
      const hr::Scenario s = make_scenario(sw);
      const hr::SweepSpec spec{sw_param, parse_values(sw_values, sw_range)};
      emit(render(hr::run_sweep(spec, s, sw.threads), sw.format), sw.out);
    } else if (*c_fig) {
      hr::FigurePreset f = hr::figure_preset(fig_id);
      auto adjust = [&](hr::Scenario& s) {
        if (fig.t_start) s.grid.start = *fig.t_start;
        if (fig.t_stop) s.grid.stop = *fig.t_stop;
        if (fig.t_points) s.grid.points = *fig.t_points;
        s.form = fig.form == "printed" ? hr::WitnessForm::printed : hr::WitnessForm::derived;
      };
      adjust(f.scenario);
      hr::WitnessTable t;
      if (f.sweep && !f.sweep_base) {
        t = hr::run_sweep(*f.sweep, f.scenario, fig.threads);
      } else {
        t = hr::run_scenario(f.scenario, fig.threads);
        if (f.sweep) {
          adjust(*f.sweep_base);
          hr::WitnessTable extra = hr::run_sweep(*f.sweep, *f.sweep_base, fig.threads);
          t.sweep_path = extra.sweep_path;
          t.rows.insert(t.rows.end(), extra.rows.begin(), extra.rows.end());
        }
      }
      t.title = "Figure " + std::to_string(f.id) + ": " + f.title;
      t.display_scale = f.display_scale;
      emit(render(t, fig.format), fig.out);
    } else if (*c_ids) {
      return run_identities(ids, brackets, tol);
    } else if (*c_orc) {
      if (orc.format != "csv") throw std::invalid_argument("oracle-compare writes csv only");
      const hr::Scenario s = make_scenario(orc);
      hr::CompareOptions opt;
      opt.cutoffs = cutoffs;
      opt.tail_bound = tail_bound;
      opt.strict_tail = !allow_tail;
      opt.form = s.form;
      const hr::CompareResult r = hr::compare_with_oracle(s.config, s.amps, s.witnesses, s.grid.times(), opt);
      emit(hr::to_csv(r), orc.out);
      std::cerr << "oracle dim " << r.oracle.dim << ", max tail mass " << r.oracle.max_tail << "\n";
    }
  } catch (const hr::TruncationError& e) {
    std::cerr << "truncation: " << e.what() << "\n";
    return kTruncation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  return kOk;
}
