#pragma once

// Second-order moment engine built on the operator solution.
//
// Every dressed coefficient is (free phase of its mode) x (sign) x (one slow
// envelope or its conjugate). A coherent-state moment of dressed operators is
// therefore a finite sum of keyed terms: a phase vector p (the time factor is
// exp(-i t sum_m p_m w_m)), a monomial of at most two envelope letters, and a
// time-independent complex weight that already contains every amplitude.
// Expansions are truncated at second order in the couplings.

#include <array>
#include <cstdint>
#include <vector>

#include "hr/coeffs.hpp"
#include "hr/model.hpp"

namespace hr {

inline constexpr int kMaxModes = 8;
inline constexpr std::uint8_t kNoLetter = 0xFF;

// letter = env * 2 + conj
inline constexpr std::uint8_t letter(Env e, bool conj) {
  return static_cast<std::uint8_t>(static_cast<int>(e) * 2 + (conj ? 1 : 0));
}

struct TermKey {
  std::array<std::int8_t, kMaxModes> phase{};
  std::uint8_t l0 = kNoLetter, l1 = kNoLetter;  // l0 <= l1, kNoLetter last

  int order() const;
  TermKey conj() const;
  auto operator<=>(const TermKey&) const = default;
};

// Product of two keys, or nullopt-like failure when the order would exceed 2.
bool multiply_keys(const TermKey& a, const TermKey& b, TermKey& out);

struct PolyTerm {
  TermKey key;
  cplx w;
  double mag = 0;  // sum of |contributions|, used to detect exact cancellation
};

// Sparse polynomial in (phase, envelope monomial), kept sorted by key.
class Poly {
 public:
  Poly() = default;
  static Poly constant(cplx c);

  const std::vector<PolyTerm>& terms() const { return terms_; }
  std::vector<PolyTerm>& terms() { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(double s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, double s) { return a *= s; }
  friend Poly operator*(double s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);  // truncated at order 2
  Poly operator-() const { return *this * -1.0; }

  Poly conj() const;
  Poly real() const;  // (P + conj P) / 2

  // Drops terms whose weight is cancellation noise, and order-0 terms if asked.
  void clean(bool drop_order0 = false);

  // Accumulate one raw contribution (unsorted); call normalize() afterwards.
  void push(const TermKey& k, cplx w);
  void normalize();

 private:
  std::vector<PolyTerm> terms_;
};

// Values needed to evaluate a Poly at one instant.
struct EvalPoint {
  double t = 0;
  std::array<cplx, 2 * kEnvCount> letters{};  // letter -> value
  std::array<double, kMaxModes> omega{};
};

EvalPoint eval_point(const SystemConfig& cfg, double t);
cplx evaluate(const Poly& p, const EvalPoint& e);
cplx key_value(const TermKey& k, const EvalPoint& e);

// Normal-ordering-free coherent expectation of a single-mode word.
// word[i] == true means creation operator; read left to right.
cplx coherent_word(const std::vector<bool>& word, cplx alpha);

// Operator letter = mode * 2 + dag.
using OpWord = std::vector<std::uint8_t>;
inline std::uint8_t op_letter(int mode, bool dag) { return static_cast<std::uint8_t>(mode * 2 + (dag ? 1 : 0)); }

// Builds the truncated dressed operators once per (config, amplitudes) and
// evaluates coherent moments of arbitrary operator words as Polys.
class MomentEngine {
 public:
  MomentEngine(const SystemConfig& cfg, const InitialAmplitudes& amps);

  // <x_1(t) x_2(t) ... > for a word of bare letters, each replaced by its
  // dressed counterpart.
  Poly moment(const OpWord& word) const;

  const SystemConfig& config() const { return cfg_; }
  const InitialAmplitudes& amplitudes() const { return amps_; }

  struct DressedTerm {
    TermKey key;   // phase + at most one letter
    double sign = 1;
    OpWord word;   // bare operators, left to right
  };
  const std::vector<DressedTerm>& dressed(int mode, bool dag) const { return ops_[mode * 2 + (dag ? 1 : 0)]; }

 private:
  cplx word_expectation(const OpWord& w) const;
  SystemConfig cfg_;
  InitialAmplitudes amps_;
  std::vector<std::vector<DressedTerm>> ops_;
};

}  // namespace hr
