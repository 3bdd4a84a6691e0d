#include "hr/coeffs.hpp"

#include <cmath>

#include "hr/divdiff.hpp"

namespace hr {

namespace {

constexpr cplx I{0, 1};

cplx phase(double w, double t) { return std::polar(1.0, -w * t); }

// Pump family envelopes (ratio f_n / f_1) are the same for every pump.
struct PumpEnv {
  cplx e2, e3, e4, e7, e8, e9, e10;
};

PumpEnv pump_env_stable(double D1, double D2, cplx g, cplx x, double t) {
  PumpEnv e;
  const double g2 = std::norm(g), x2 = std::norm(x);
  e.e2 = std::conj(g) * kernel_p(-D1, t);
  e.e3 = x * kernel_p(D2, t);
  e.e4 = -g2 * kernel_q(0, -D1, t);
  e.e7 = -std::conj(x) * std::conj(g) * kernel_q(-D1, -D1 - D2, t);
  e.e8 = -x * std::conj(g) * (D1 + D2) * kernel_p3(-D1, D2, D2 - D1, t);
  e.e9 = -x * g * kernel_q(D1 + D2, D2, t);
  e.e10 = -x2 * kernel_q(D2, 0, t);
  return e;
}

PumpEnv pump_env_printed(double D1, double D2, cplx g, cplx x, double t) {
  auto E = [t](double y) { return std::exp(I * (y * t)); };
  const cplx gs = std::conj(g), xs = std::conj(x);
  const double g2 = std::norm(g), x2 = std::norm(x);
  PumpEnv e;
  e.e2 = -gs / D1 * (E(-D1) - 1.0);
  e.e3 = x / D2 * (E(D2) - 1.0);
  e.e4 = -g2 / (D1 * D1) * (E(-D1) - 1.0) - I * g2 * t / D1;
  e.e7 = -xs * gs / D2 * ((E(-(D1 + D2)) - 1.0) / (D1 + D2) - (E(-D1) - 1.0) / D1);
  e.e8 = -x * gs / D2 * ((E(-(D1 - D2)) - 1.0) / (D1 - D2) - E(-D1) / D1) -
         x * gs / D1 * ((E(-(D1 - D2)) - 1.0) / (D1 - D2) + E(D2) / D2);
  e.e9 = -x * g / D1 * ((E(D1 + D2) - 1.0) / (D1 + D2) - (E(D2) - 1.0) / D2);
  e.e10 = -x2 / (D2 * D2) * (E(D2) - 1.0) + I * x2 * t / D2;
  return e;
}

void fill_pump(PumpCoefficients& p, cplx f1, const PumpEnv& e) {
  auto& f = p.f;
  f[1] = f1;
  f[2] = f1 * e.e2;
  f[3] = f1 * e.e3;
  f[4] = f1 * e.e4;
  f[5] = -f[4];
  f[6] = -f[4];
  f[7] = f1 * e.e7;
  f[8] = f1 * e.e8;
  f[9] = f1 * e.e9;
  f[10] = f1 * e.e10;
  f[11] = f[10];
  f[12] = -f[10];
}

}  // namespace

CoefficientTables coefficients(const SystemConfig& cfg, double t, CoeffForm form) {
  const Detunings dt = detunings(cfg);
  const double D1 = dt.delta1, D2 = dt.delta2;
  const cplx g = cfg.g, x = cfg.chi, gs = std::conj(g), xs = std::conj(x);
  const double g2 = std::norm(g), x2 = std::norm(x);

  CoefficientTables c;
  c.t = t;
  const PumpEnv pe = form == CoeffForm::stable ? pump_env_stable(D1, D2, g, x, t) : pump_env_printed(D1, D2, g, x, t);
  c.pump.resize(cfg.k);
  for (int j = 0; j < cfg.k; ++j) {
    c.pump[j].j = j;
    fill_pump(c.pump[j], phase(cfg.omega_pump[j], t), pe);
  }

  auto& G = c.stokes.g;
  auto& H = c.vib.h;
  auto& L = c.anti.l;
  G[1] = phase(cfg.omega_b, t);
  H[1] = phase(cfg.omega_c, t);
  L[1] = phase(cfg.omega_d, t);

  if (form == CoeffForm::stable) {
    G[2] = g * G[1] * kernel_p(D1, t);
    G[3] = -xs * g * G[1] * kernel_q(D1 - D2, D1, t);
    G[4] = -g2 * G[1] * kernel_q(D1, 0, t);
    G[6] = x * g * G[1] * kernel_q(D1 + D2, D1, t);

    H[2] = g * H[1] * kernel_p(D1, t);
    H[3] = x * H[1] * kernel_p(D2, t);
    H[4] = -g2 * H[1] * kernel_q(D1, 0, t);
    H[6] = x * g * (D1 - D2) * H[1] * kernel_p3(D1 + D2, D1, D2, t);
    H[7] = -x2 * H[1] * kernel_q(D2, 0, t);

    L[2] = xs * L[1] * kernel_p(-D2, t);
    L[3] = xs * g * L[1] * kernel_q(D1 - D2, -D2, t);
    L[4] = xs * gs * L[1] * kernel_q(-D2, -D1 - D2, t);
    L[5] = x2 * L[1] * kernel_q(0, -D2, t);
  } else {
    auto E = [t](double y) { return std::exp(I * (y * t)); };
    G[2] = g * G[1] / D1 * (E(D1) - 1.0);
    G[3] = xs * g * G[1] / D2 * ((E(D1 - D2) - 1.0) / (D1 - D2) - (E(D1) - 1.0) / D1);
    G[4] = -g2 * G[1] / (D1 * D1) * (E(D1) - 1.0) + I * g2 * t * G[1] / D1;
    G[6] = x * g * G[1] / D2 * ((E(D1 + D2) - 1.0) / (D1 + D2) - (E(D1) - 1.0) / D1);

    H[2] = g * H[1] / D1 * (E(D1) - 1.0);
    H[3] = x * H[1] / D2 * (E(D2) - 1.0);
    H[4] = -g2 * H[1] / (D1 * D1) * (E(D1) - 1.0) + I * g2 * t * H[1] / D1;
    H[6] = x * g * H[1] / D2 * ((E(D1 + D2) - 1.0) / (D1 + D2) - E(D1) / D1) -
           x * g * H[1] / D1 * ((E(D1 + D2) - 1.0) / (D1 + D2) - E(D2) / D2);
    H[7] = -x2 * H[1] / (D2 * D2) * (E(D2) - 1.0) + I * x2 * t * H[1] / D2;

    L[2] = -xs * L[1] / D2 * (E(-D2) - 1.0);
    L[3] = xs * g * L[1] / D1 * ((E(D1 - D2) - 1.0) / (D1 - D2) + (E(-D2) - 1.0) / D2);
    L[4] = xs * gs * L[1] / D1 * ((E(-(D1 + D2)) - 1.0) / (D1 + D2) - (E(-D2) - 1.0) / D2);
    L[5] = x2 * L[1] / (D2 * D2) * (E(-D2) - 1.0) + I * x2 * t * L[1] / D2;
  }
  G[5] = -G[4];
  H[5] = -H[4];
  H[8] = -H[7];
  L[6] = L[5];
  return c;
}

const char* env_name(Env e) {
  static const char* names[] = {"U", "V", "F4", "F7", "F8", "F9", "F10", "G3", "H6", "L3"};
  return names[static_cast<int>(e)];
}

Envelopes envelopes(const SystemConfig& cfg, double t) {
  const Detunings dt = detunings(cfg);
  const double D1 = dt.delta1, D2 = dt.delta2;
  const cplx g = cfg.g, x = cfg.chi;
  const PumpEnv pe = pump_env_stable(D1, D2, g, x, t);
  Envelopes e;
  auto set = [&e](Env k, cplx v) { e.v[static_cast<int>(k)] = v; };
  set(Env::U, pe.e2);
  set(Env::V, pe.e3);
  set(Env::F4, pe.e4);
  set(Env::F7, pe.e7);
  set(Env::F8, pe.e8);
  set(Env::F9, pe.e9);
  set(Env::F10, pe.e10);
  set(Env::G3, -std::conj(x) * g * kernel_q(D1 - D2, D1, t));
  set(Env::H6, x * g * (D1 - D2) * kernel_p3(D1 + D2, D1, D2, t));
  set(Env::L3, std::conj(x) * g * kernel_q(D1 - D2, -D2, t));
  return e;
}

}  // namespace hr
