#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "hr/scenario.hpp"
#include "hr/witness.hpp"

using namespace hr;

namespace {

InitialAmplitudes random_amps(std::mt19937_64& rng, int k) {
  std::uniform_real_distribution<double> r(0, 3), ph(-3.2, 3.2);
  InitialAmplitudes a;
  for (int i = 0; i < k; ++i) a.alpha.push_back(std::polar(r(rng), ph(rng)));
  a.beta = std::polar(r(rng), ph(rng));
  a.gamma = std::polar(r(rng), ph(rng));
  a.delta = std::polar(r(rng), ph(rng));
  return a;
}

}  // namespace

TEST_CASE("ids round trip") {
  const auto cfg = optical_config(2);
  for (const char* id : {"sq:a1", "psq:a2-d", "asq3:c", "ab2:b", "pab:c-d", "hz12:a1-c", "hz21:b-a2"}) {
    CHECK(WitnessRequest::parse(id, cfg).id(cfg) == id);
  }
  const auto r = WitnessRequest::parse("hz12:a1-c", cfg);
  CHECK(r.m == 1);
  CHECK(r.n == 2);
  CHECK(r.two_branch());
  CHECK_FALSE(WitnessRequest::parse("ab3:a1", cfg).two_branch());
  for (const char* bad : {"hz1:a1-b", "sq:e", "psq:a1-a1", "ab1:a1", "asq0:a1", "sq:a3", "sq2:a1", "pab:a1", "x"}) {
    CHECK_THROWS_AS(WitnessRequest::parse(bad, cfg), std::invalid_argument);
  }
}

TEST_CASE("catalog covers every single mode and pair") {
  const auto cfg = optical_config(2);
  const auto cat = witness_catalog(cfg);
  // 5 modes x (sq, asq2..3, ab2..3) and 10 pairs x (psq, pab, 4 hz)
  std::set<std::string> ids;
  for (const auto& r : cat) ids.insert(r.id(cfg));
  CHECK(ids.size() == cat.size());
  CHECK(cat.size() == 85);
  CHECK(ids.count("hz22:c-d") == 1);
}

TEST_CASE("derived witnesses vanish for the initial coherent state") {
  std::mt19937_64 rng(1);
  const auto cfg = SystemConfig::make({3, 4}, 5.5, 1.5, 8.2);
  const auto amps = random_amps(rng, 2);
  const CompiledWitnessSet set(cfg, amps, witness_catalog(cfg));
  for (const auto& v : set.evaluate(0.0)) {
    CHECK(v.primary == 0.0);
    CHECK(v.secondary.value_or(0.0) == 0.0);
  }
}

TEST_CASE("compiled set matches one-by-one evaluation") {
  std::mt19937_64 rng(2);
  const auto cfg = SystemConfig::make({2.2, 3.7, 1.1}, 5.1, 1.9, 9.3, std::polar(1.0, 0.5), std::polar(1.3, 2.0));
  const auto amps = random_amps(rng, 3);
  const auto cat = witness_catalog(cfg);
  const CompiledWitnessSet set(cfg, amps, cat);
  for (double t : {0.01, 0.3}) {
    const auto vals = set.evaluate(t);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const auto v = evaluate_witness(cat[i], cfg, amps, t);
      const double s = 1e-11 * (1 + std::abs(v.primary));
      CHECK(std::abs(vals[i].primary - v.primary) < s);
      if (v.secondary) CHECK(std::abs(*vals[i].secondary - *v.secondary) < 1e-11 * (1 + std::abs(*v.secondary)));
    }
  }
}

TEST_CASE("pair order only relabels the HZ powers") {
  std::mt19937_64 rng(4);
  const auto cfg = SystemConfig::make({3, 4}, 5.5, 1.5, 8.2);
  const auto amps = random_amps(rng, 2);
  for (auto form : {WitnessForm::derived, WitnessForm::printed}) {
    const auto a = evaluate_witness(WitnessRequest::parse("hz12:a1-c", cfg), cfg, amps, 0.2, form);
    const auto b = evaluate_witness(WitnessRequest::parse("hz21:c-a1", cfg), cfg, amps, 0.2, form);
    CHECK(a.primary == doctest::Approx(b.primary).epsilon(1e-12));
    CHECK(*a.secondary == doctest::Approx(*b.secondary).epsilon(1e-12));
  }
}

TEST_CASE("printed zero and sign theorems over random sweeps") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> tt(0, 2);
  for (int c = 0; c < 30; ++c) {
    const int k = 1 + c % 3;
    std::vector<double> w(k, 0.0);
    for (int i = 0; i < k; ++i) w[i] = 3.0 + i;
    const double S = k * 3.0 + k * (k - 1) / 2.0;
    const auto cfg = SystemConfig::make(w, S - 1.4 + tt(rng), 1.4, S + 1.4 - tt(rng));
    const auto amps = random_amps(rng, k);
    const double t = tt(rng);
    auto val = [&](const std::string& id) {
      return evaluate_witness(WitnessRequest::parse(id, cfg), cfg, amps, t, WitnessForm::printed);
    };
    CHECK(val("sq:d").primary == 0.0);
    CHECK(*val("sq:d").secondary == 0.0);
    for (int n = 1; n <= 3; ++n) CHECK(val("asq" + std::to_string(n) + ":d").primary == 0.0);
    for (int n = 2; n <= 3; ++n) {
      CHECK(val("ab" + std::to_string(n) + ":d").primary == 0.0);
      CHECK(val("ab" + std::to_string(n) + ":b").primary >= 0.0);
    }
    CHECK(val("sq:b").primary >= 0.0);
    CHECK(val("pab:c-d").primary <= 0.0);
  }
}
