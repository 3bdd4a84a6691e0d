#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hr/scenario.hpp"

using namespace hr;

TEST_CASE("time grid") {
  const auto t = TimeGrid{0, 1, 5}.times();
  CHECK(t.size() == 5);
  CHECK(t[2] == doctest::Approx(0.5));
  CHECK(t.back() == 1.0);
  CHECK(TimeGrid{0.3, 0.3, 1}.times() == std::vector<double>{0.3});
  CHECK_THROWS_AS((TimeGrid{0, 1, 0}.times()), std::invalid_argument);
  CHECK_THROWS_AS((TimeGrid{1, 0, 3}.times()), std::invalid_argument);
  CHECK_THROWS_AS((TimeGrid{-1, 0, 3}.times()), std::invalid_argument);
}

TEST_CASE("presets") {
  const auto st = preset("stimulated", 3);
  CHECK(st.amps.alpha.size() == 3);
  CHECK(std::abs(st.amps.beta) == 8);
  CHECK(std::abs(st.amps.gamma) == doctest::Approx(0.01));
  const auto sp = preset("spontaneous", 2);
  CHECK(sp.amps.beta == cplx{});
  CHECK(sp.amps.gamma == cplx{});
  CHECK(sp.amps.delta == cplx{});
  CHECK(std::abs(sp.amps.alpha[1]) == 10);
  CHECK_THROWS_AS(preset("nope", 2), std::invalid_argument);
  CHECK_THROWS_AS(preset("certification", 3), std::invalid_argument);
  const auto d = detunings(preset("certification", 2).config);
  CHECK(d.delta1 == doctest::Approx(-10));
  CHECK(d.delta2 == doctest::Approx(19));
}

TEST_CASE("parameter paths") {
  auto s = preset("stimulated", 2);
  s.amps.alpha[0] = std::polar(10.0, 0.4);
  apply_parameter(s, "alpha1.abs", 12);
  CHECK(std::abs(s.amps.alpha[0]) == doctest::Approx(12));
  CHECK(std::arg(s.amps.alpha[0]) == doctest::Approx(0.4));
  apply_parameter(s, "alpha1.phase", -std::numbers::pi / 2);
  CHECK(std::abs(s.amps.alpha[0]) == doctest::Approx(12));
  CHECK(s.amps.alpha[0].imag() == doctest::Approx(-12));
  apply_parameter(s, "delta.abs", 3);
  CHECK(std::abs(s.amps.delta) == doctest::Approx(3));

  const auto before = detunings(s.config);
  const double sum = s.config.pump_sum();
  apply_parameter(s, "omega_pump1.fixed_sum", 45e6);
  CHECK(s.config.omega_pump[0] == 45e6);
  CHECK(s.config.pump_sum() == doctest::Approx(sum));
  CHECK(detunings(s.config).delta1 == doctest::Approx(before.delta1).epsilon(1e-6));

  apply_parameter(s, "omega_pump2", s.config.omega_pump[1] + 5);
  CHECK(detunings(s.config).delta1 == doctest::Approx(before.delta1 - 5).epsilon(1e-6));

  for (const char* bad : {"alpha3.abs", "alpha1.real", "omega_pump0", "kappa", "beta"})
    CHECK_THROWS_AS(apply_parameter(s, bad, 1), std::invalid_argument);
  auto one = preset("stimulated", 1);
  CHECK_THROWS_AS(apply_parameter(one, "omega_pump1.fixed_sum", 1), std::invalid_argument);
}

TEST_CASE("figure presets") {
  for (int id = 2; id <= 8; ++id) {
    const auto f = figure_preset(id);
    CHECK_FALSE(f.scenario.witnesses.empty());
    CHECK_FALSE(f.title.empty());
  }
  CHECK(figure_preset(2).sweep->values == std::vector<double>{10, 12});
  const auto f8 = figure_preset(8);
  CHECK(f8.scenario.amps.beta == cplx{});
  CHECK(f8.sweep->values.size() == 16);
  CHECK(f8.sweep->values.back() == doctest::Approx(65e6));
  CHECK(f8.sweep_base.has_value());
  CHECK_THROWS_AS(figure_preset(9), std::invalid_argument);
  CHECK_THROWS_AS(figure_preset(1), std::invalid_argument);
}

TEST_CASE("sweeps") {
  auto s = preset("stimulated", 2);
  s.grid = TimeGrid{0, 1e-3, 4};
  s.witnesses = {WitnessRequest::parse("sq:a1", s.config)};
  CHECK_THROWS_AS(run_sweep(SweepSpec{"alpha2.abs", {}}, s), std::invalid_argument);
  const auto t = run_sweep(SweepSpec{"alpha2.abs", {10, 12}}, s);
  CHECK(t.rows.size() == 8);
  CHECK(t.rows.back().sweep_value == 12.0);
  const auto ex = sweep_extrema(t);
  CHECK(ex.size() == 2);
}

TEST_CASE("thread count does not change the numbers") {
  const auto cfg = optical_config(2);
  const CompiledWitnessSet set(cfg, preset("stimulated", 2).amps, witness_catalog(cfg));
  const auto times = TimeGrid{0, 2e-3, 97}.times();
  CHECK(run_dense(set, times, 1).values == run_dense(set, times, 5).values);
}

TEST_CASE("csv quoting and json round trip") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a1,b") == "\"a1,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");

  auto s = preset("stimulated", 2);
  s.grid = TimeGrid{0, 1e-3, 3};
  s.witnesses = {WitnessRequest::parse("psq:a1-b", s.config), WitnessRequest::parse("ab2:a1", s.config)};
  auto t = run_sweep(SweepSpec{"alpha1.phase", {0.1, -0.2}}, s);
  t.display_scale = {{"ab2:a1", 1e4}};
  const std::string csv = to_csv(t);
  CHECK(csv.rfind("t,witness_id,modes,m,n,value_primary,value_secondary,nonclassical,alpha1.phase\r\n", 0) == 0);
  CHECK(csv.find("\"a1,b\"") != std::string::npos);
  const auto back = table_from_json(to_json_text(t));
  CHECK(back == t);
  CHECK(back.display_scale == t.display_scale);
  CHECK_THROWS_AS(table_from_json("{"), std::invalid_argument);
}

TEST_CASE("svg has a zero line and scales only in the legend") {
  auto s = preset("stimulated", 2);
  s.grid = TimeGrid{0, 1e-3, 5};
  s.witnesses = {WitnessRequest::parse("ab2:a1", s.config)};
  auto t = run_scenario(s);
  const std::string plain = to_csv(t);
  t.display_scale = {{"ab2:a1", 1e4}};
  const std::string svg = to_svg(t);
  CHECK(svg.find("class=\"zero\"") != std::string::npos);
  CHECK(svg.find("ab2:a1 x10000") != std::string::npos);
  CHECK(to_csv(t) == plain);
}

TEST_CASE("printed form tables run") {
  auto s = preset("stimulated", 3);
  s.grid = TimeGrid{0, 1e-3, 3};
  s.form = WitnessForm::printed;
  s.witnesses = witness_catalog(s.config);
  const auto t = run_scenario(s, 2);
  CHECK(t.rows.size() == 3 * s.witnesses.size());
}
