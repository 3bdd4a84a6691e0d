#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "hr/coeffs.hpp"

namespace hr {

void IdentityResidualReport::add(std::string name, cplx value, double scale) {
  IdentityResidual r{std::move(name), std::abs(value), scale};
  max_abs = std::max(max_abs, r.abs);
  max_rel = std::max(max_rel, r.rel());
  residuals.push_back(std::move(r));
}

namespace {

using std::conj;
using std::norm;

// A term with the magnitude it is computed from. For 2 Re z that is 2|z|: the
// real part of a product is what cancels, so |z| sets the rounding floor.
struct Term {
  cplx v;
  double mag;
  Term(cplx z) : v(z), mag(std::abs(z)) {}
  Term(double x) : v(x), mag(std::abs(x)) {}
  Term(cplx z, double m) : v(z), mag(m) {}
  Term operator-() const { return {-v, mag}; }
};

Term re2(cplx z) { return {2 * z.real(), 2 * std::abs(z)}; }

// sum of terms with the largest single magnitude as scale
void put(IdentityResidualReport& rep, std::string name, std::initializer_list<Term> terms) {
  cplx s{};
  double m = 0;
  for (const Term& z : terms) {
    s += z.v;
    m = std::max(m, z.mag);
  }
  rep.add(std::move(name), s, m);
}

std::string pname(int j) { return "a" + std::to_string(j + 1); }

}  // namespace

IdentityResidualReport check_etcr(const CoefficientTables& c, BracketForm form) {
  IdentityResidualReport rep;
  for (const auto& p : c.pump) {
    const auto& f = p.f;
    const std::string a = "etcr " + pname(p.j) + ": ";
    put(rep, a + "Al nb nc", {re2(conj(f[1]) * f[4]), -norm(f[2])});
    put(rep, a + "N b b+", {re2(conj(f[1]) * f[5]), norm(f[2])});
    put(rep, a + "N nc", {re2(conj(f[1]) * f[6]), re2(conj(f[1]) * f[12]), norm(f[2]), norm(f[3])});
    put(rep, a + "Al b+ c+^2 d", {conj(f[7]) * f[1], conj(f[1]) * f[9], -conj(f[2]) * f[3]});
    put(rep, a + "Al c c+ nd", {re2(conj(f[1]) * f[11]), -norm(f[3])});
    // commutator algebra gives -|f3|^2 here; the typeset bracket has +
    const double s = form == BracketForm::corrected ? -1.0 : 1.0;
    put(rep, a + "N nd", {re2(conj(f[1]) * f[10]), s * norm(f[3])});
  }
  const auto& g = c.stokes.g;
  put(rep, "etcr b: N", {re2(conj(g[1]) * g[4]), -norm(g[2])});
  put(rep, "etcr b: Al nc", {re2(conj(g[1]) * g[5]), norm(g[2])});
  const auto& h = c.vib.h;
  put(rep, "etcr c: N", {re2(conj(h[1]) * h[4]), re2(conj(h[1]) * h[8]), -norm(h[2]), norm(h[3])});
  put(rep, "etcr c: Al nb", {re2(conj(h[1]) * h[5]), norm(h[2])});
  put(rep, "etcr c: Al nd", {re2(conj(h[1]) * h[7]), -norm(h[3])});
  const auto& l = c.anti.l;
  put(rep, "etcr d: AA+", {re2(conj(l[1]) * l[6]), norm(l[2])});
  put(rep, "etcr d: Al nc", {re2(conj(l[1]) * l[5]), norm(l[2])});
  return rep;
}

IdentityResidualReport check_constants(const CoefficientTables& c, BracketForm form) {
  IdentityResidualReport rep;
  const auto& g = c.stokes.g;
  const auto& h = c.vib.h;
  const auto& l = c.anti.l;

  // C1 = n_aj + n_b + n_d
  for (const auto& p : c.pump) {
    const auto& f = p.f;
    const std::string a = "C1 " + pname(p.j) + ": ";
    put(rep, a + "B b c", {conj(f[1]) * f[2], conj(g[2]) * g[1]});
    put(rep, a + "B c+ d", {conj(f[1]) * f[3], conj(l[2]) * l[1]});
    put(rep, a + "Al nb nc", {re2(conj(f[1]) * f[4]), re2(conj(g[1]) * g[5])});
    put(rep, a + "N nc", {re2(conj(f[1]) * f[6]), re2(conj(f[1]) * f[12]), norm(g[2]), norm(l[2])});
    put(rep, a + "N nb", {re2(conj(f[1]) * f[5]), re2(conj(g[1]) * g[4])});
    put(rep, a + "N", {re2(conj(f[1]) * f[5]), norm(g[2])});
    // the anti-Stokes entry multiplies d+ Al b c^2, so its conjugate sits on l4
    const cplx l41 = form == BracketForm::corrected ? conj(l[1]) * l[4] : conj(l[4]) * l[1];
    put(rep, a + "Al b c^2 d+", {conj(f[1]) * f[7], conj(f[9]) * f[1], conj(g[6]) * g[1], l41});
    if (form == BracketForm::corrected) {
      // partner of the entry above: the (B+ B) part of |f3 f2| cross term
      put(rep, a + "B+B b c^2 d+", {conj(f[3]) * f[2], conj(g[6]) * g[1], conj(l[1]) * l[4]});
    }
    put(rep, a + "B^2 b d", {conj(f[1]) * f[8], conj(g[3]) * g[1], conj(l[3]) * l[1]});
    put(rep, a + "N nd", {re2(conj(f[1]) * f[10]), re2(conj(l[1]) * l[6])});
    put(rep, a + "Al c c+ nd", {re2(conj(f[1]) * f[11]), re2(conj(l[1]) * l[5])});
  }

  // C2 = n_aj - n_ar
  for (std::size_t j = 0; j < c.pump.size(); ++j) {
    for (std::size_t r = j + 1; r < c.pump.size(); ++r) {
      const auto& f = c.pump[j].f;
      const auto& q = c.pump[r].f;
      const std::string a = "C2 " + pname(static_cast<int>(j)) + pname(static_cast<int>(r)) + ": ";
      put(rep, a + "B b c", {conj(f[1]) * f[2], -conj(q[1]) * q[2]});
      put(rep, a + "B c+ d", {conj(f[1]) * f[3], -conj(q[1]) * q[3]});
      put(rep, a + "Al nb nc", {norm(f[2]), -norm(q[2])});
      put(rep, a + "N b b+", {re2(conj(f[1]) * f[5]), -re2(conj(q[1]) * q[5])});
      put(rep, a + "N nc", {re2(conj(f[1]) * f[6]), re2(conj(f[1]) * f[12]), -re2(conj(q[1]) * q[6]), -re2(conj(q[1]) * q[12])});
      put(rep, a + "Al b c^2 d+", {conj(f[1]) * f[7], conj(f[9]) * f[1], -conj(q[3]) * q[2]});
      put(rep, a + "B^2 b d", {conj(f[1]) * f[8], -conj(q[1]) * q[8]});
      put(rep, a + "N nd", {re2(conj(f[1]) * f[10]), -re2(conj(q[1]) * q[10])});
      put(rep, a + "Al c c+ nd", {norm(f[3]), -norm(q[3])});
    }
  }

  // C3 = n_c + n_d - n_b
  put(rep, "C3: A b+ c+", {conj(h[1]) * h[2], -conj(g[1]) * g[2]});
  put(rep, "C3: A+ c+ d", {conj(h[1]) * h[3], conj(l[2]) * l[1]});
  put(rep, "C3: N nc", {re2(conj(h[1]) * h[4]), re2(conj(h[1]) * h[8]), -norm(g[2]), norm(l[2])});
  put(rep, "C3: Al nb nc", {re2(conj(h[1]) * h[5]), -re2(conj(g[1]) * g[5])});
  put(rep, "C3: Al b+ c+^2 d", {conj(h[1]) * h[6], -conj(g[1]) * g[6], conj(l[4]) * l[1]});
  put(rep, "C3: Al nc nd", {re2(conj(h[1]) * h[7]), re2(conj(l[1]) * l[5])});
  put(rep, "C3: N", {norm(h[2]), -norm(g[2])});
  put(rep, "C3: AA+ nd", {re2(conj(l[1]) * l[6]), norm(h[3])});
  put(rep, "C3: A+^2 b d", {conj(h[2]) * h[3], -conj(g[3]) * g[1], conj(l[3]) * l[1]});
  return rep;
}

std::vector<OdeResidual> verify_odes(const SystemConfig& cfg, double t, double dt, CoeffForm form) {
  const CoefficientTables c0 = coefficients(cfg, t, form);
  const CoefficientTables cp = coefficients(cfg, t + dt, form);
  const CoefficientTables cm = coefficients(cfg, t - dt, form);
  const cplx I{0, 1};
  const cplx g = cfg.g, x = cfg.chi, gs = conj(g), xs = conj(x);
  const auto& G = c0.stokes.g;
  const auto& H = c0.vib.h;
  const auto& L = c0.anti.l;

  cplx P1{1, 0};
  for (const auto& p : c0.pump) P1 *= p.f[1];
  // pump-independent partner ratios f2/f1, f3/f1
  const cplx e2 = c0.pump[0].f[2] / c0.pump[0].f[1];
  const cplx e3 = c0.pump[0].f[3] / c0.pump[0].f[1];

  std::vector<OdeResidual> out;
  auto check = [&](std::string name, cplx plus, cplx minus, cplx here, double w, cplx rhs) {
    const cplx fd = (plus - minus) / (2 * dt);
    const cplx model = -I * w * here + rhs;
    out.push_back({std::move(name), std::abs(fd - model), std::abs(w * here) + std::abs(rhs)});
  };

  for (int j = 0; j < cfg.k; ++j) {
    const auto& f = c0.pump[j].f;
    const auto& fp = cp.pump[j].f;
    const auto& fm = cm.pump[j].f;
    cplx Fj{1, 0};
    for (int i = 0; i < cfg.k; ++i)
      if (i != j) Fj *= conj(c0.pump[i].f[1]);
    const double w = cfg.omega_pump[j];
    const std::array<cplx, 13> rhs = {
        cplx{},
        cplx{},
        I * gs * Fj * G[1] * H[1],
        I * x * Fj * conj(H[1]) * L[1],
        I * gs * Fj * conj(e2) * G[1] * H[1],
        I * gs * Fj * G[1] * H[2],
        I * gs * Fj * G[2] * H[1],
        I * gs * Fj * conj(e3) * G[1] * H[1],
        I * gs * Fj * G[1] * H[3] + I * x * Fj * conj(H[2]) * L[1],
        I * x * Fj * conj(e2) * conj(H[1]) * L[1],
        I * x * Fj * conj(H[3]) * L[1],
        I * x * Fj * conj(e3) * conj(H[1]) * L[1],
        I * x * Fj * conj(H[1]) * L[2],
    };
    for (int n = 1; n <= 12; ++n)
      check("f" + std::to_string(n) + "(a" + std::to_string(j + 1) + ")", fp[n], fm[n], f[n], w, rhs[n]);
  }
  {
    const auto& p = cp.stokes.g;
    const auto& m = cm.stokes.g;
    const std::array<cplx, 7> rhs = {cplx{},
                                     cplx{},
                                     I * g * P1 * conj(H[1]),
                                     I * g * P1 * conj(H[3]),
                                     I * g * P1 * conj(H[2]),
                                     I * g * P1 * e2 * conj(H[1]),
                                     I * g * P1 * e3 * conj(H[1])};
    for (int n = 1; n <= 6; ++n) check("g" + std::to_string(n), p[n], m[n], G[n], cfg.omega_b, rhs[n]);
  }
  {
    const auto& p = cp.vib.h;
    const auto& m = cm.vib.h;
    const std::array<cplx, 9> rhs = {cplx{},
                                     cplx{},
                                     I * g * P1 * conj(G[1]),
                                     I * x * conj(P1) * L[1],
                                     I * g * P1 * conj(G[2]),
                                     I * g * P1 * e2 * conj(G[1]),
                                     I * g * P1 * e3 * conj(G[1]) + I * x * conj(P1) * conj(e2) * L[1],
                                     I * x * conj(P1) * conj(e3) * L[1],
                                     I * x * conj(P1) * L[2]};
    for (int n = 1; n <= 8; ++n) check("h" + std::to_string(n), p[n], m[n], H[n], cfg.omega_c, rhs[n]);
  }
  {
    const auto& p = cp.anti.l;
    const auto& m = cm.anti.l;
    const std::array<cplx, 7> rhs = {cplx{},
                                     cplx{},
                                     I * xs * P1 * H[1],
                                     I * xs * P1 * H[2],
                                     I * xs * P1 * e2 * H[1],
                                     I * xs * P1 * e3 * H[1],
                                     I * xs * P1 * H[3]};
    for (int n = 1; n <= 6; ++n) check("l" + std::to_string(n), p[n], m[n], L[n], cfg.omega_d, rhs[n]);
  }
  return out;
}

double max_ode_residual(const std::vector<OdeResidual>& r) {
  double m = 0;
  for (const auto& x : r) m = std::max(m, x.abs);
  return m;
}

}  // namespace hr
