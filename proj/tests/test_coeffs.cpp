#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "hr/coeffs.hpp"
#include "hr/divdiff.hpp"

using namespace hr;

namespace {

// composite Simpson for int_0^t f(s) ds
template <class F>
cplx simpson(F f, double t, int n = 2000) {
  const double h = t / n;
  cplx s = f(0.0) + f(t);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

SystemConfig random_config(std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> u(-20, 20), ph(-3, 3);
  std::vector<double> w(k);
  double S = 0;
  for (auto& x : w) S += (x = 40 + u(rng));
  const double wc = 3 + std::abs(u(rng));
  return SystemConfig::make(w, S - wc + u(rng), wc, S + wc - u(rng), std::polar(1.0, ph(rng)),
                            std::polar(0.5 + std::abs(u(rng)) / 20, ph(rng)));
}

}  // namespace

TEST_CASE("phase kernel against quadrature") {
  for (double y : {0.0, 1e-9, 0.3, -7.0, 25.0}) {
    const double t = 0.8;
    const cplx q = simpson([&](double s) { return cplx{0, 1} * std::exp(cplx{0, y * s}); }, t, 20000);
    CHECK(std::abs(kernel_p(y, t) - q) < 1e-12);
  }
}

TEST_CASE("second kernel against nested quadrature") {
  // Q(y, z) = (P(y) - P(z)) / (y - z) = int_0^t i s e^{i y s} ... written as
  // a nested integral: int_0^t ds i e^{i z s} int_0^s ds' i e^{i (y - z) s'}
  for (auto [y, z] : std::array<std::pair<double, double>, 4>{{{0, 0}, {3, -2}, {5, 5}, {-11, 0.5}}}) {
    const double t = 0.6;
    const cplx q = simpson(
        [&](double s) {
          return cplx{0, 1} * std::exp(cplx{0, z * s}) * kernel_p(y - z, s);
        },
        t, 4000);
    CHECK(std::abs(kernel_q(y, z, t) - q) < 1e-11);
  }
}

TEST_CASE("divided differences") {
  const std::array<cplx, 2> two{cplx{0, 3}, cplx{0, -1}};
  CHECK(std::abs(exp_divdiff(two) - (std::exp(two[0]) - std::exp(two[1])) / (two[0] - two[1])) < 1e-14);
  const std::array<cplx, 3> same{cplx{0, 0.4}, cplx{0, 0.4}, cplx{0, 0.4}};
  CHECK(std::abs(exp_divdiff(same) - std::exp(same[0]) / 2.0) < 1e-15);
  // symmetric pair about the centroid: odd Taylor terms vanish, even ones must not be dropped
  const std::array<cplx, 2> sym{cplx{0, 0.45}, cplx{0, -0.45}};
  CHECK(std::abs(exp_divdiff(sym) - cplx{std::sin(0.45) / 0.45, 0}) < 1e-15);
  // continuity through a near-coincidence
  const double t = 1.3;
  CHECK(std::abs(kernel_q(2.0, 2.0 + 1e-9, t) - kernel_q(2.0, 2.0, t)) < 1e-8);
  CHECK(std::abs(kernel_p3(1.0, 1.0, 1.0 + 1e-8, t) - kernel_p3(1.0, 1.0, 1.0, t)) < 1e-7);
  CHECK_THROWS_AS(exp_divdiff(std::span<const cplx>{}), std::invalid_argument);
}

TEST_CASE("stable and printed coefficient forms agree off resonance") {
  std::mt19937_64 rng(3);
  for (int c = 0; c < 5; ++c) {
    const auto cfg = random_config(rng, 1 + c % 3);
    for (double t : {0.1, 0.7}) {
      const auto a = coefficients(cfg, t, CoeffForm::stable);
      const auto b = coefficients(cfg, t, CoeffForm::printed);
      for (std::size_t j = 0; j < a.pump.size(); ++j)
        for (int i = 1; i <= 12; ++i) CHECK(std::abs(a.pump[j].f[i] - b.pump[j].f[i]) < 1e-9);
      for (int i = 1; i <= 6; ++i) CHECK(std::abs(a.stokes.g[i] - b.stokes.g[i]) < 1e-9);
      for (int i = 1; i <= 8; ++i) CHECK(std::abs(a.vib.h[i] - b.vib.h[i]) < 1e-9);
      for (int i = 1; i <= 6; ++i) CHECK(std::abs(a.anti.l[i] - b.anti.l[i]) < 1e-9);
    }
  }
}

TEST_CASE("zeroth-order coefficients are free phases") {
  const auto cfg = SystemConfig::make({3, 4}, 5.5, 1.5, 8.2);
  const double t = 0.9;
  const auto c = coefficients(cfg, t);
  CHECK(std::abs(c.pump[1].f[1] - std::exp(cplx{0, -4 * t})) < 1e-15);
  CHECK(std::abs(c.stokes.g[1] - std::exp(cplx{0, -5.5 * t})) < 1e-15);
  const auto z = coefficients(cfg, 0.0);
  CHECK(std::abs(z.pump[0].f[2]) == 0.0);
  CHECK(std::abs(z.anti.l[6]) == 0.0);
}

TEST_CASE("envelopes depend on detunings only") {
  const auto a = SystemConfig::make({3, 4}, 5.5, 1.5, 8.2);
  const auto b = SystemConfig::make({6, 1}, 5.5, 1.5, 8.2);  // same pump sum
  const auto ea = envelopes(a, 0.7), eb = envelopes(b, 0.7);
  for (int i = 0; i < kEnvCount; ++i) CHECK(std::abs(ea.v[i] - eb.v[i]) < 1e-15);
}

TEST_CASE("bracket identities hold for random couplings") {
  std::mt19937_64 rng(11);
  for (int c = 0; c < 20; ++c) {
    const auto cfg = random_config(rng, 1 + c % 3);
    for (double t : {0.05, 0.4, 1.5}) {
      const auto tab = coefficients(cfg, t);
      CHECK(check_etcr(tab).ok(1e-12));
      CHECK(check_constants(tab).ok(1e-12));
    }
  }
}

TEST_CASE("typeset bracket signs fail by the size of |f3|^2") {
  const auto cfg = SystemConfig::make({3, 4}, 5.5, 1.5, 8.2);
  const auto tab = coefficients(cfg, 0.5);
  const auto rep = check_etcr(tab, BracketForm::printed);
  CHECK_FALSE(rep.ok(1e-6));
  double f3 = std::norm(tab.pump[0].f[3]);
  bool seen = false;
  for (const auto& r : rep.residuals)
    if (r.name == "etcr a1: N nd") {
      seen = true;
      CHECK(r.abs == doctest::Approx(2 * f3).epsilon(1e-10));
    }
  CHECK(seen);
}

TEST_CASE("coefficients obey their equations of motion at second order in dt") {
  std::mt19937_64 rng(5);
  for (int c = 0; c < 4; ++c) {
    const auto cfg = random_config(rng, 1 + c % 3);
    const double r1 = max_ode_residual(verify_odes(cfg, 0.6, 1e-2));
    const double r2 = max_ode_residual(verify_odes(cfg, 0.6, 5e-3));
    CHECK(r1 / r2 == doctest::Approx(4).epsilon(0.12));
  }
}
