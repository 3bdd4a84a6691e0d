#include <doctest.h>

#include <cmath>

#include "hr/expansion.hpp"

using namespace hr;

namespace {

const SystemConfig kCfg = SystemConfig::make({3.1, 4.2}, 5.5, 1.5, 8.2, std::polar(1.0, 0.4), std::polar(0.7, -0.9));
const InitialAmplitudes kAmps{{std::polar(1.2, 0.3), std::polar(0.8, -1.0)}, {0.5, 0.2}, {0.3, -0.1}, {-0.2, 0.4}};

cplx value(const MomentEngine& e, const OpWord& w, double t) { return evaluate(e.moment(w), eval_point(kCfg, t)); }

}  // namespace

TEST_CASE("coherent single-mode words") {
  const cplx a{0.7, -0.4};
  const double n = std::norm(a);
  CHECK(std::abs(coherent_word({true, false}, a) - n) < 1e-15);
  CHECK(std::abs(coherent_word({false, true}, a) - (n + 1)) < 1e-15);
  // <a a a+ a+> = |a|^4 + 4|a|^2 + 2
  CHECK(std::abs(coherent_word({false, false, true, true}, a) - (n * n + 4 * n + 2)) < 1e-14);
  CHECK(std::abs(coherent_word({false, false}, a) - a * a) < 1e-15);
}

TEST_CASE("key products respect the order budget") {
  TermKey u, f4, out;
  u.l0 = letter(Env::U, false);
  f4.l0 = letter(Env::F4, false);
  CHECK(u.order() == 1);
  CHECK(f4.order() == 2);
  CHECK(multiply_keys(u, u, out));
  CHECK(out.order() == 2);
  CHECK_FALSE(multiply_keys(u, f4, out));
  CHECK(f4.conj().l0 == letter(Env::F4, true));
}

TEST_CASE("poly arithmetic") {
  Poly a = Poly::constant({2, 1});
  Poly b = a.conj();
  const EvalPoint e = eval_point(kCfg, 0.3);
  CHECK(std::abs(evaluate(a * b, e) - 5.0) < 1e-15);
  CHECK(std::abs(evaluate((a + b).real(), e) - 4.0) < 1e-15);
  Poly z = a - a;
  z.clean();
  CHECK(z.terms().empty());
}

TEST_CASE("initial moments are coherent-state moments") {
  const MomentEngine eng(kCfg, kAmps);
  CHECK(std::abs(value(eng, {op_letter(0, false)}, 0) - kAmps.alpha[0]) < 1e-15);
  CHECK(std::abs(value(eng, {op_letter(2, true), op_letter(2, false)}, 0) - std::norm(kAmps.beta)) < 1e-15);
  CHECK(std::abs(value(eng, {op_letter(4, false), op_letter(3, false)}, 0) - kAmps.delta * kAmps.gamma) < 1e-15);
}

TEST_CASE("equal-time commutators survive the truncation") {
  const MomentEngine eng(kCfg, kAmps);
  for (int m = 0; m < kCfg.modes(); ++m)
    for (double t : {0.2, 0.9}) {
      const cplx c = value(eng, {op_letter(m, false), op_letter(m, true)}, t) -
                     value(eng, {op_letter(m, true), op_letter(m, false)}, t);
      CHECK(std::abs(c - 1.0) < 1e-12);
    }
  // different modes commute
  const cplx x = value(eng, {op_letter(0, false), op_letter(2, false)}, 0.5) -
                 value(eng, {op_letter(2, false), op_letter(0, false)}, 0.5);
  CHECK(std::abs(x) < 1e-12);
}

TEST_CASE("constants of motion are conserved by the expanded moments") {
  const MomentEngine eng(kCfg, kAmps);
  auto n = [&](int m, double t) { return value(eng, {op_letter(m, true), op_letter(m, false)}, t).real(); };
  const int b = kCfg.stokes(), c = kCfg.vibration(), d = kCfg.antistokes();
  for (double t : {0.3, 1.1}) {
    for (int j = 0; j < kCfg.k; ++j)
      CHECK(n(j, t) + n(b, t) + n(d, t) == doctest::Approx(n(j, 0) + n(b, 0) + n(d, 0)).epsilon(1e-12));
    CHECK(n(0, t) - n(1, t) == doctest::Approx(n(0, 0) - n(1, 0)).epsilon(1e-12));
    CHECK(n(c, t) + n(d, t) - n(b, t) == doctest::Approx(n(c, 0) + n(d, 0) - n(b, 0)).epsilon(1e-12));
  }
}
