#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hr/model.hpp"

namespace hr {

// stable: every coefficient through divided-difference kernels (default).
// printed: literal transcription with explicit 1/detuning factors; singular at
// the resonances and prone to cancellation, kept for cross-checking.
enum class CoeffForm { stable, printed };

struct PumpCoefficients {
  int j = 0;
  std::array<cplx, 13> f{};  // f[1..12]
};
struct StokesCoefficients {
  std::array<cplx, 7> g{};  // g[1..6]
};
struct VibrationCoefficients {
  std::array<cplx, 9> h{};  // h[1..8]
};
struct AntiStokesCoefficients {
  std::array<cplx, 7> l{};  // l[1..6]
};

struct CoefficientTables {
  double t = 0;
  std::vector<PumpCoefficients> pump;
  StokesCoefficients stokes;
  VibrationCoefficients vib;
  AntiStokesCoefficients anti;
};

CoefficientTables coefficients(const SystemConfig& cfg, double t, CoeffForm form = CoeffForm::stable);

// Slow envelopes: every coefficient equals its family's free phase times one of
// these (up to sign and conjugation). They depend on t, the detunings and the
// couplings only, never on the individual mode frequencies.
enum class Env : std::uint8_t { U, V, F4, F7, F8, F9, F10, G3, H6, L3, count };
inline constexpr int kEnvCount = static_cast<int>(Env::count);
inline constexpr int env_order(Env e) { return (e == Env::U || e == Env::V) ? 1 : 2; }
const char* env_name(Env e);

struct Envelopes {
  std::array<cplx, kEnvCount> v{};
  cplx operator[](Env e) const { return v[static_cast<int>(e)]; }
};

Envelopes envelopes(const SystemConfig& cfg, double t);

// Identity suites -------------------------------------------------------------

// corrected: brackets as they follow from the commutator algebra of the
// operator solution. printed: two brackets with the typeset sign/conjugation.
enum class BracketForm { corrected, printed };

struct IdentityResidual {
  std::string name;
  double abs = 0;    // |combination|
  double scale = 0;  // largest single term in the combination
  double rel() const { return scale > 0 ? abs / scale : abs; }
};

struct IdentityResidualReport {
  std::vector<IdentityResidual> residuals;
  double max_abs = 0;
  double max_rel = 0;
  void add(std::string name, cplx value, double scale);
  bool ok(double tol = 1e-12) const { return max_rel < tol; }
};

IdentityResidualReport check_etcr(const CoefficientTables& c, BracketForm form = BracketForm::corrected);
IdentityResidualReport check_constants(const CoefficientTables& c, BracketForm form = BracketForm::corrected);

struct OdeResidual {
  std::string name;
  double abs = 0;
  double scale = 0;
};

// Central difference of each coefficient against the right-hand side of its
// coupled first-order equation.
std::vector<OdeResidual> verify_odes(const SystemConfig& cfg, double t, double dt,
                                     CoeffForm form = CoeffForm::stable);
double max_ode_residual(const std::vector<OdeResidual>& r);

}  // namespace hr
