#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hr/model.hpp"
#include "hr/scenario.hpp"

using namespace hr;

TEST_CASE("make rescales by |g|") {
  const auto c = SystemConfig::make({4, 6}, 8, 2, 12, cplx{0, 2});
  CHECK(std::abs(c.g) == doctest::Approx(1));
  CHECK(c.g.imag() == doctest::Approx(1));
  CHECK(c.chi == c.g);  // chi defaults to g
  CHECK(c.omega_pump[0] == doctest::Approx(2));
  CHECK(c.omega_d == doctest::Approx(6));
  CHECK(c.modes() == 5);
  CHECK(c.mode_name(2) == "b");
  CHECK(c.mode_index("a2") == 1);
  CHECK(c.mode_index("d") == 4);
  CHECK_THROWS_AS(c.mode_index("a3"), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig::make({}, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(SystemConfig::make({1}, 1, 1, 1, cplx{0, 0}), std::invalid_argument);
}

TEST_CASE("preset detunings") {
  for (int k = 1; k <= 3; ++k) {
    const auto d = detunings(optical_config(k));
    // inputs are ~1e8, so only ~1e-7 absolute survives the subtraction
    CHECK(d.delta1 == doctest::Approx(-10).epsilon(1e-6));
    CHECK(d.delta2 == doctest::Approx(19).epsilon(1e-6));
  }
  CHECK_THROWS_AS(optical_config(4), std::invalid_argument);
}

TEST_CASE("sigma_l and pump products") {
  InitialAmplitudes a;
  a.alpha = {10, 10};
  CHECK(sigma_l(a) == doctest::Approx(201));
  a.alpha = {cplx{0, 2}};
  CHECK(sigma_l(a) == doctest::Approx(1));  // one pump: (|a|^2 + 1) - |a|^2
  a.alpha = {1, 2, 3};
  CHECK(sigma_l(a) == doctest::Approx(2 * 5 * 10 - 36));
  CHECK(pump_product_intensity(a) == doctest::Approx(36));
  CHECK(pump_product_intensity(a, 1) == doctest::Approx(9));
}

TEST_CASE("config json round trip") {
  auto cfg = SystemConfig::make({3, 5}, 6, 1.5, 9.5, std::polar(2.0, 0.3), std::polar(1.0, -1.1));
  InitialAmplitudes a{{std::polar(2.0, 0.5), 1.0}, {0.1, 0.2}, 0.3, {0, -0.4}};
  const auto back = config_from_json(to_json(cfg, a));
  CHECK(back.config.k == 2);
  CHECK(back.config.omega_d == doctest::Approx(cfg.omega_d));
  CHECK(std::abs(back.config.chi - cfg.chi) < 1e-15);
  CHECK(std::abs(back.amps.alpha[0] - a.alpha[0]) < 1e-15);
  CHECK(std::abs(back.amps.delta - a.delta) < 1e-15);

  nlohmann::json bad = to_json(cfg, a);
  bad["omega_pump"] = {1.0};
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
  bad = to_json(cfg, a);
  bad["beta"] = "x";
  CHECK_THROWS_AS(config_from_json(bad), std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("validate rejects a mismatched amplitude vector") {
  const auto cfg = optical_config(2);
  InitialAmplitudes a;
  a.alpha = {1};
  CHECK_THROWS_AS(validate(cfg, a), std::invalid_argument);
  a.alpha = {1, 1};
  CHECK_NOTHROW(validate(cfg, a));
}
