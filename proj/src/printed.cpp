// Closed-form witnesses as typeset, with the two stacked signs evaluated as two
// branches (s = +1 top, s = -1 bottom). Shorthand used throughout:
//   Ai2, ai   : |alpha_i|^2 and alpha_i products over the partner pumps
//               (i != j for one pump, i not in {j, r} for a pump pair, all
//               pumps for b, c, d)
//   sl        : sigma_l, always over all pumps
//   {X + c.c.} is 2 Re X.
// Three vacuum offsets of the mixed-mode squeezing forms and the grouping of
// one pump-pump antibunching term are read as described in ERRATA.md.

#include <cmath>
#include <stdexcept>

#include "hr/witness.hpp"

namespace hr {

namespace {

using std::conj;
using std::norm;

double re2(cplx z) { return 2 * z.real(); }

// |x|^(2e) style powers; a negative exponent on a vanishing base is taken as 0
double pw(double x, int e) {
  if (e < 0 && x == 0) return 0;
  return std::pow(x, e);
}
cplx cpw(cplx z, int e) {
  if (e < 0 && z == cplx{}) return 0;
  return std::pow(z, e);
}

struct Ctx {
  const InitialAmplitudes& amps;
  const CoefficientTables& c;
  double sl;
  cplx be, ga, de;
  double B2, G2, D2;

  Ctx(const InitialAmplitudes& a, const CoefficientTables& tab)
      : amps(a), c(tab), sl(sigma_l(a)), be(a.beta), ga(a.gamma), de(a.delta),
        B2(norm(a.beta)), G2(norm(a.gamma)), D2(norm(a.delta)) {}

  // product of alpha_i over pumps not in `skip`
  cplx ai(std::initializer_list<int> skip) const {
    cplx p{1, 0};
    for (int i = 0; i < static_cast<int>(amps.alpha.size()); ++i) {
      bool s = false;
      for (int x : skip) s |= x == i;
      if (!s) p *= amps.alpha[i];
    }
    return p;
  }
  const std::array<cplx, 13>& f(int j) const { return c.pump.at(j).f; }
  const std::array<cplx, 7>& g() const { return c.stokes.g; }
  const std::array<cplx, 9>& h() const { return c.vib.h; }
  const std::array<cplx, 7>& l() const { return c.anti.l; }
};

// single-mode variances minus 1/4, branch s
double sq_pump(const Ctx& x, int j, double s) {
  const auto& f = x.f(j);
  const auto& g = x.g();
  const cplx ai = x.ai({j});
  const double Ai2 = norm(ai);
  return 0.25 * (2 * norm(f[2]) * x.sl * x.B2 * x.G2 + 2 * norm(f[3]) * x.D2 * (Ai2 + x.sl * (x.G2 + 1)) +
                 2 * re2(conj(f[2]) * f[3] * x.sl * conj(x.be) * conj(x.ga) * conj(x.ga) * x.de -
                         s * f[1] * f[1] * conj(g[3]) * g[1] * conj(ai) * conj(ai) * x.be * x.de));
}

double sq_b(const Ctx& x) { return 0.5 * norm(x.g()[2]) * norm(x.ai({})); }

double sq_c(const Ctx& x, double s) {
  const auto& h = x.h();
  const auto& g = x.g();
  return 0.25 * (2 * norm(h[2]) * norm(x.ai({})) + 2 * norm(h[3]) * x.sl * x.D2 +
                 s * 2 * re2(h[1] * h[1] * conj(g[1]) * g[6] * x.sl * conj(x.be) * x.de));
}

double sq_single(const Ctx& x, const SystemConfig& cfg, int mode, double s) {
  if (mode < cfg.k) return sq_pump(x, mode, s);
  if (mode == cfg.stokes()) return sq_b(x);
  if (mode == cfg.vibration()) return sq_c(x, s);
  return 0;
}

double pair_squeeze(const Ctx& x, const SystemConfig& cfg, int a, int b, double s) {
  const auto& g = x.g();
  const auto& h = x.h();
  const auto& l = x.l();
  const cplx be = x.be, ga = x.ga, de = x.de;
  const cplx bs = conj(be), gs = conj(ga), ds = conj(de);
  const double B2 = x.B2, G2 = x.G2, D2 = x.D2, sl = x.sl;
  const double va = sq_single(x, cfg, a, s), vb = sq_single(x, cfg, b, s);
  if (a < cfg.k && b < cfg.k) {
    const auto& f = x.f(a);
    const auto& r = x.f(b);
    const cplx aj = x.amps.alpha[a], ar = x.amps.alpha[b];
    const cplx ai = x.ai({a, b});
    const double Ai2 = norm(ai);
    const cplx inner = f[1] * r[2] * conj(ai) * be * ga + f[1] * r[3] * conj(ai) * bs * de +
                       f[1] * r[4] * B2 * G2 * aj * ar * sl + f[1] * r[5] * Ai2 * (B2 + 1) * aj * ar +
                       (f[1] * r[6] + f[1] * r[12]) * Ai2 * G2 * aj * ar +
                       f[1] * r[10] * (Ai2 + sl * (G2 + 1)) * D2 * aj * ar + f[1] * r[7] * aj * ar * sl * be * ga * ga * ds +
                       (2.0 * f[1] * r[8] + f[2] * r[3]) * conj(aj) * conj(ar) * conj(ai) * conj(ai) * be * de +
                       f[1] * r[9] * aj * ar * sl * bs * gs * gs * de;
    const cplx S = f[2] * conj(r[2]) * B2 * G2 * aj * conj(ar) * sl + f[3] * conj(r[2]) * aj * conj(ar) * sl * bs * gs * gs * de +
                   f[2] * conj(r[3]) * aj * conj(ar) * sl * be * ga * ga * ds + s * inner +
                   f[3] * conj(r[3]) * (Ai2 + sl * (G2 + 1)) * D2 * aj * conj(ar);
    return 0.25 * (2 * (va + vb) + re2(S));
  }
  if (a < cfg.k) {
    const auto& f = x.f(a);
    const cplx aj = x.amps.alpha[a];
    const cplx ai = x.ai({a});
    const double Ai2 = norm(ai);
    if (b == cfg.stokes()) {
      const cplx S = f[3] * conj(g[2]) * conj(aj) * conj(ai) * conj(ai) * de - s * f[4] * g[1] * Ai2 * aj * be -
                     s * f[1] * g[4] * G2 * sl * aj * be + s * f[1] * g[6] * sl * aj * gs * gs * de;
      return 0.25 * (2 * (va + vb) + re2(S));
    }
    if (b == cfg.vibration()) {
      const cplx S = f[2] * conj(h[3]) * sl * aj * be * ga * ds + f[3] * conj(h[3]) * D2 * sl * aj * gs +
                     s * ((f[1] * h[7] - f[4] * h[1]) * Ai2 * aj * ga + f[1] * h[3] * conj(ai) * de +
                          f[1] * h[4] * B2 * sl * aj * ga + f[1] * h[6] * sl * aj * bs * gs * de +
                          f[1] * h[7] * D2 * sl * aj * ga);
      return 0.25 * (2 * (va + vb) + re2(S));
    }
    // anti-Stokes partner: its variance is exactly 1/4, i.e. vb = 0
    const cplx S = f[1] * l[4] * sl * aj * be * ga * ga + s * f[1] * l[5] * aj * de * (Ai2 + sl * (G2 + 1));
    return 0.25 * (2 * va + re2(S));
  }
  const cplx ai = x.ai({});
  if (a == cfg.stokes() && b == cfg.vibration()) {
    const cplx S = g[2] * conj(h[2]) * sl * be * gs +
                   s * (g[1] * h[2] * ai + g[1] * h[5] * sl * be * ga + 2.0 * g[6] * h[1] * sl * gs * de);
    return 0.25 * (2 * (va + vb) + re2(S));
  }
  if (a == cfg.stokes()) return 0.25 * (2 * va + s * re2(g[1] * l[3] * ai * ai));
  return 0.25 * (2 * va + s * re2(h[1] * l[5] * sl * ga * de));
}

double amp_squeeze(const Ctx& x, const SystemConfig& cfg, int a, int n, double s) {
  const double n2 = n * n;
  if (a < cfg.k) {
    const auto& f = x.f(a);
    const auto& g = x.g();
    const cplx ai = x.ai({a});
    const double Ai2 = norm(ai), Aj2 = norm(x.amps.alpha[a]);
    return 0.5 * n2 * pw(Aj2, n - 1) *
           (norm(f[2]) * x.sl * x.B2 * x.G2 + norm(f[3]) * x.D2 * (Ai2 + x.sl * (x.G2 + 1)) +
            re2(conj(f[2]) * f[3] * x.sl * conj(x.be) * conj(x.ga) * conj(x.ga) * x.de -
                s * f[1] * f[1] * conj(g[3]) * g[1] * conj(ai) * conj(ai) * x.be * x.de));
  }
  if (a == cfg.stokes()) return 0.5 * n2 * norm(x.g()[2]) * norm(x.ai({})) * pw(x.B2, n - 1);
  if (a == cfg.vibration()) {
    const auto& h = x.h();
    const auto& g = x.g();
    return 0.5 * n2 * pw(x.G2, n - 1) *
           (norm(h[2]) * norm(x.ai({})) + norm(h[3]) * x.sl * x.D2 +
            s * re2(cpw(h[1], 2 * n) * conj(g[1]) * g[6] * x.sl * conj(x.be) * x.de));
  }
  return 0;
}

double antibunch(const Ctx& x, const SystemConfig& cfg, int a, int n) {
  const double nn = n * (n - 1.0);
  if (a < cfg.k) {
    const auto& f = x.f(a);
    const auto& g = x.g();
    const cplx aj = x.amps.alpha[a], ai = x.ai({a});
    const double Aj2 = norm(aj), Ai2 = norm(ai);
    return nn * (pw(Aj2, n - 1) * (norm(f[2]) * x.B2 * x.G2 * x.sl + norm(f[3]) * x.D2 * (Ai2 + x.sl * (x.G2 + 1))) +
                 pw(Aj2, n - 2) * re2(conj(f[2]) * f[3] * x.sl * conj(x.be) * conj(x.ga) * conj(x.ga) * x.de -
                                      conj(g[1]) * g[3] * aj * aj * ai * ai * conj(x.be) * conj(x.de)));
  }
  if (a == cfg.stokes()) return nn * norm(x.g()[2]) * norm(x.ai({})) * pw(x.B2, n - 1);
  if (a == cfg.vibration()) {
    const auto& h = x.h();
    const auto& g = x.g();
    return nn * ((norm(h[2]) * norm(x.ai({})) + norm(h[3]) * x.sl * x.D2) * pw(x.G2, n - 1) +
                 re2(conj(g[6]) * g[1] * pw(x.G2, n - 2) * x.sl * x.be * x.ga * x.ga * conj(x.de)));
  }
  return 0;
}

double pair_antibunch(const Ctx& x, const SystemConfig& cfg, int a, int b) {
  const auto& g = x.g();
  const auto& h = x.h();
  const auto& l = x.l();
  const cplx be = x.be, ga = x.ga, de = x.de;
  const cplx bs = conj(be), gs = conj(ga), ds = conj(de);
  const double B2 = x.B2, G2 = x.G2, D2 = x.D2, sl = x.sl;
  if (a < cfg.k && b < cfg.k) {
    const auto& f = x.f(a);
    const cplx aj = x.amps.alpha[a], ar = x.amps.alpha[b], ai = x.ai({a, b});
    const double Aj2 = norm(aj), Ar2 = norm(ar), Ai2 = norm(ai);
    const double Q = norm(f[2]) * B2 * G2 + norm(f[3]) * D2 * (G2 + 1) + re2(conj(f[2]) * f[3] * bs * gs * gs * de);
    const cplx ajs = conj(aj), ars = conj(ar), ais = conj(ai);
    return Aj2 * Ar2 * Ai2 * (-norm(f[2]) * (B2 + G2 + 1) + norm(f[3]) * (3 * D2 - G2)) + 3 * Aj2 * Ar2 * sl * Q +
           2 * (Ai2 + sl) * (Aj2 + Ar2 + 1) * Q + 2 * Aj2 * (Ai2 + sl) * Q +
           re2(conj(f[1]) * f[2] * ajs * ars * ais * be * ga +
               (2.0 * conj(f[1]) * f[8] + conj(f[1]) * conj(f[1]) * f[2] * f[3]) * ajs * ajs * ars * ars * ais * ais * be * de +
               conj(f[1]) * f[3] * ajs * ars * ais * gs * de);
  }
  if (a < cfg.k) {
    const auto& f = x.f(a);
    const cplx aj = x.amps.alpha[a], ai = x.ai({a});
    const double Aj2 = norm(aj), Ai2 = norm(ai);
    if (b == cfg.stokes())
      return -norm(f[2]) * Aj2 * B2 * (Ai2 + sl * G2) +
             re2((conj(f[1]) * f[9] + conj(g[1]) * g[2] * conj(f[1]) * f[3]) * Aj2 * sl * bs * gs * gs * de);
    if (b == cfg.vibration())
      return -Aj2 * G2 * (norm(f[2]) * (Ai2 + sl * B2) - norm(f[3]) * (Ai2 + sl * D2)) +
             norm(f[3]) * D2 * (Ai2 + sl) * (2 * G2 + 1) +
             re2(conj(f[1]) * f[3] * conj(aj) * conj(ai) * gs * de +
                 conj(h[2]) * h[1] * conj(f[1]) * f[3] * conj(aj) * conj(aj) * conj(ai) * conj(ai) * be * de +
                 conj(f[2]) * f[3] * (Ai2 + sl) * bs * gs * gs * de +
                 (2.0 * conj(f[1]) * f[9] + conj(h[1]) * h[2] * conj(f[1]) * f[3]) * Aj2 * sl * bs * gs * gs * de);
    return norm(f[3]) * Aj2 * D2 * (Ai2 + sl * (G2 + (D2 - 1))) +
           re2((conj(f[1]) * f[7] + conj(l[1]) * l[2] * conj(f[1]) * f[2]) * Aj2 * sl * be * ga * ga * ds);
  }
  const cplx ai = x.ai({});
  const double Ai2 = norm(ai);
  if (a == cfg.stokes() && b == cfg.vibration())
    return norm(g[2]) * Ai2 * (2 * G2 + 1) +
           re2(conj(g[1]) * g[2] * ai * bs * gs + conj(g[1]) * g[5] * B2 * G2 * sl + conj(g[1]) * g[6] * sl * bs * gs * gs * de +
               conj(h[2]) * h[1] * conj(g[1]) * g[2] * Ai2 * B2 + conj(h[3]) * h[1] * conj(g[1]) * g[2] * ai * ai * bs * ds);
  if (a == cfg.stokes()) return re2(conj(l[1]) * l[3] * ai * ai * bs * ds);
  return -norm(l[2]) * G2 * D2 * sl;
}

double hz(const Ctx& x, const SystemConfig& cfg, int a, int b, int m, int n, double s) {
  const auto& g = x.g();
  const auto& h = x.h();
  const auto& l = x.l();
  const cplx be = x.be, ga = x.ga, de = x.de;
  const cplx bs = conj(be), gs = conj(ga), ds = conj(de);
  const double B2 = x.B2, G2 = x.G2, D2 = x.D2, sl = x.sl;
  const double M = m, N = n;
  if (a < cfg.k && b < cfg.k) {
    const auto& f = x.f(a);
    const cplx aj = x.amps.alpha[a], ar = x.amps.alpha[b], ai = x.ai({a, b});
    const double Aj = norm(aj), Ar = norm(ar), Ai2 = norm(ai);
    const double pre = pw(Aj, m - 1) * pw(Ar, n - 1);
    const double t1 = norm(f[2]) * pre *
                      (Ai2 * (-M * N * Aj * Ar * (1 + B2 + G2) +
                              s * B2 * G2 * (M * M * N * N + M * M * (2 * N + s) * Ar + N * N * (2 * M + s) * Aj)) +
                       (M * M * (1 + Ar) * Ar + N * N * (1 + Aj) * Aj + s * M * N * Aj * Ar) * sl * B2 * G2);
    const double t2 = norm(f[3]) * pre *
                      (Ai2 * (D2 * (M * M * (1 + Ar) * Ar + N * N * (1 + Aj) * Aj +
                                    (M * M * (1 + 2 * s * N) * Ar + N * N * (1 + 2 * s * M) * Aj + s * M * M * N * N) * G2) +
                              s * M * N * Aj * Ar * (D2 - G2)) +
                       sl * (G2 + 1) * D2 * (M * M * Ar * (1 + Ar) + N * N * (1 + Aj) * Aj + s * M * N * Aj * Ar));
    // F_{a+}; the |f2|^2 term carries sigma_l alone as typeset
    const double Fa = s > 0 ? M * N * pre * (2 * N * Aj + 2 * M * Ar + M * N) *
                                  (norm(f[2]) * sl + norm(f[3]) * D2 * (Ai2 + sl * (G2 + 1)) +
                                   re2(conj(f[2]) * f[3] * sl * bs * gs * gs * de))
                            : 0.0;
    const cplx P = aj * aj * ar * ar * ai * ai;
    const cplx br =
        conj(f[2]) * f[1] * aj * ar * ai * bs * gs + conj(f[3]) * f[1] * aj * ar * ai * ga * ds +
        (conj(f[2]) * conj(f[2]) * f[1] * f[1] * P * bs * bs * gs * gs + conj(f[3]) * conj(f[3]) * f[1] * f[1] * P * ga * ga * ds * ds) *
            ((M - 1) * Ar + (N - 1) * Aj + (M - 1) * (N - 1) / 2) +
        P * bs * ds *
            (conj(f[8]) * f[1] * ((2 * Aj + M - 1) * Ar + (N - 1) * (Aj + (M - 1) / 2)) +
             f[1] * f[1] * conj(f[2]) * conj(f[3]) *
                 (G2 * (N - 1) * (2 * Aj + M - 1) + (N - 1) * (Aj + (M - 1) / 2) + 2 * (M - 1) * Ar * (2 * G2 + 1) + Ar * G2)) +
        conj(f[2]) * f[3] * Aj * Ar * bs * gs * gs * de *
            (Ai2 * (N * N * (1 + 2 * s * M) * Aj + M * M * (1 + 2 * s * N) * Ar + s * M * M * N * N) +
             sl * (N * N * (1 + Aj) * Aj + M * M * (1 + Ar) * Ar + s * M * N * Aj * Ar));
    return t1 + t2 + Fa + s * M * N * pw(Aj, m - 2) * pw(Ar, n - 2) * re2(br);
  }
  if (a < cfg.k) {
    const auto& f = x.f(a);
    const cplx aj = x.amps.alpha[a], ai = x.ai({a});
    const double Aj = norm(aj), Ai2 = norm(ai);
    const cplx w = bs * gs * gs * de;
    if (b == cfg.stokes())
      return norm(f[2]) * pw(Aj, m - 1) * pw(B2, n - 1) * (N * Aj - s * M * B2) * (N * Aj * Ai2 - M * sl * B2 * G2) +
             M * M * norm(f[3]) * pw(Aj, m - 1) * pw(B2, n) * D2 * (Ai2 + sl * (G2 + 1)) +
             M * pw(Aj, m - 1) * pw(B2, n - 1) * sl * re2((M * conj(f[2]) * f[3] * B2 + s * N * conj(g[1]) * g[6] * Aj) * w);
    if (b == cfg.vibration()) {
      const double pre = pw(Aj, m - 1) * pw(G2, n - 1);
      const double Fc = s > 0 ? M * N * sl * pre * ((N * Aj + M * G2) * 2 * norm(f[3]) * D2 + re2(M * conj(f[2]) * f[3] * w)) : 0.0;
      const cplx br = conj(f[3]) * f[1] * Aj * G2 * aj * ai * ga * ds +
                      conj(f[2]) * f[3] * Aj * Ai2 * w * (M * G2 - (N - 1) * Aj) +
                      conj(h[3]) * h[2] * G2 * aj * aj * ai * ai * bs * ds * (N * Aj - (M - 1) * G2) +
                      Aj * sl * w *
                          (M / N * conj(f[2]) * f[3] * G2 * G2 + s * conj(h[1]) * h[6] * Aj * G2 +
                           s * (N - 1) * Aj * (conj(f[1]) * f[9] - conj(f[2]) * f[3]));
      return norm(f[2]) * (N * Aj * Ai2 - M * sl * B2 * G2) * (N * Aj - s * M * G2) * pre +
             norm(f[3]) * pre *
                 (Ai2 * (N * N * (1 + 2 * s * M) * Aj * D2 + M * M * (1 + 2 * s * N) * G2 * D2 - s * M * N * Aj * G2 +
                         s * M * M * N * N * D2) +
                  (N * N * (1 + Aj) * Aj + M * M * (1 + G2) * G2 + s * M * N * Aj * G2) * sl * D2) +
             Fc + s * M * N * pw(Aj, m - 2) * pw(G2, n - 2) * re2(br);
    }
    return M * norm(f[3]) * pw(Aj, m - 1) * (Ai2 + sl * (G2 + 1)) * pw(D2, n) * (M * D2 - s * N * Aj) +
           M * M * norm(f[2]) * pw(Aj, m - 1) * pw(D2, n) * B2 * G2 * sl +
           M * pw(Aj, m - 1) * pw(D2, n - 1) * sl * re2((M * conj(f[2]) * f[3] * D2 + N * conj(l[4]) * l[1] * Aj) * w);
  }
  const cplx ai = x.ai({});
  const double Ai2 = norm(ai);
  if (a == cfg.stokes() && b == cfg.vibration()) {
    const cplx br = conj(g[2]) * g[1] * B2 * G2 * conj(ai) * be * ga + N * conj(h[3]) * h[2] * B2 * G2 * ai * ai * bs * ds +
                    conj(g[6]) * g[1] * sl * B2 * be * ga * ga * ds * (2 * G2 + N - 1) +
                    (N - 1) * conj(h[1]) * conj(h[1]) * h[2] * h[3] * Ai2 * B2 * bs * gs * gs * de +
                    conj(g[2]) * conj(g[2]) * g[1] * g[1] * conj(ai) * conj(ai) * be * be * ga * ga *
                        (0.5 * (M - 1) * (N - 1) + (N - 1) * B2 + (M - 1) * G2);
    return norm(g[2]) * pw(B2, m - 1) * pw(G2, n - 1) *
               (M * M * (1 + 2 * s * N) * Ai2 * G2 + N * N * (1 + 2 * s * M) * Ai2 * B2 + s * M * M * N * N * Ai2 -
                s * M * N * sl * B2 * G2) +
           N * N * norm(h[3]) * sl * pw(B2, m) * pw(G2, n - 1) * D2 + s * M * N * pw(B2, m - 2) * pw(G2, n - 2) * re2(br);
  }
  if (a == cfg.stokes())
    return M * M * norm(g[2]) * Ai2 * pw(B2, m - 1) * pw(D2, n) +
           s * M * N * pw(B2, m - 1) * pw(D2, n - 1) * re2(conj(l[1]) * l[3] * ai * ai * bs * ds);
  return M * M * norm(h[2]) * Ai2 * pw(G2, m - 1) * pw(D2, n) +
         norm(l[2]) * pw(G2, m - 1) * pw(D2, n) * sl * (M * M * D2 - s * M * N * G2);
}

}  // namespace

bool has_printed_form(const WitnessRequest& r, const SystemConfig& cfg) {
  validate_request(r, cfg);
  return true;  // every single mode and every pair type is covered
}

WitnessValue printed_witness(const WitnessRequest& req, const SystemConfig& cfg, const CoefficientTables& c,
                             const InitialAmplitudes& amps) {
  validate_request(req, cfg);
  if (static_cast<int>(c.pump.size()) != cfg.k) throw std::invalid_argument("printed_witness: table/config mismatch");
  const Ctx x(amps, c);
  int a = req.modes[0], b = req.modes.size() > 1 ? req.modes[1] : -1;
  int m = req.m, n = req.n;
  if (b >= 0 && a > b) {
    std::swap(a, b);
    std::swap(m, n);
  }
  WitnessValue v;
  v.equation_tag = std::string(witness_tag(req.kind)) + " [printed]";
  switch (req.kind) {
    case WitnessKind::single_squeeze:
      v.primary = sq_single(x, cfg, a, +1);
      v.secondary = sq_single(x, cfg, a, -1);
      break;
    case WitnessKind::pair_squeeze:
      v.primary = pair_squeeze(x, cfg, a, b, +1);
      v.secondary = pair_squeeze(x, cfg, a, b, -1);
      break;
    case WitnessKind::amplitude_squeeze:
      v.primary = amp_squeeze(x, cfg, a, req.n, +1);
      v.secondary = amp_squeeze(x, cfg, a, req.n, -1);
      break;
    case WitnessKind::antibunch: v.primary = antibunch(x, cfg, a, req.n); break;
    case WitnessKind::pair_antibunch: v.primary = pair_antibunch(x, cfg, a, b); break;
    case WitnessKind::hz:
      v.primary = hz(x, cfg, a, b, m, n, +1);
      v.secondary = hz(x, cfg, a, b, m, n, -1);
      break;
  }
  v.nonclassical = v.primary < 0 || (v.secondary && *v.secondary < 0);
  return v;
}

}  // namespace hr
