#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hr/coeffs.hpp"
#include "hr/expansion.hpp"
#include "hr/model.hpp"

namespace hr {

enum class WitnessKind { single_squeeze, pair_squeeze, amplitude_squeeze, antibunch, pair_antibunch, hz };

// Modes use the SystemConfig layout (pumps 0..k-1, b, c, d).
// amplitude_squeeze: n = quadrature power. antibunch: n = moment power, the
// witness is D(n-1). hz: m on modes[0], n on modes[1].
struct WitnessRequest {
  WitnessKind kind = WitnessKind::single_squeeze;
  std::vector<int> modes;
  int m = 0, n = 0;

  // e.g. sq:a1, psq:a1-b, asq3:c, ab2:a1, pab:a1-a2, hz12:a1-c
  std::string id(const SystemConfig& cfg) const;
  static WitnessRequest parse(const std::string& id, const SystemConfig& cfg);
  bool two_branch() const;
};

// primary = X / A1 / HZ-I, secondary = Y / A2 / HZ-II. Squeezing values are
// variance - 1/4.
struct WitnessValue {
  double primary = 0;
  std::optional<double> secondary;
  std::string equation_tag;
  bool nonclassical = false;
};

void validate_request(const WitnessRequest& r, const SystemConfig& cfg);  // throws std::invalid_argument

// Every single-mode and two-mode witness for this mode count. Orders: asq
// n = 1..max_order, ab n = 2..max_order, hz m,n in {1,2}.
std::vector<WitnessRequest> witness_catalog(const SystemConfig& cfg, int max_order = 3);

// derived: moments of the operator solution, expanded consistently to second
// order in the couplings. printed: the closed forms as typeset (see printed.cpp).
enum class WitnessForm { derived, printed };

struct WitnessPolys {
  Poly primary, secondary;
  bool has_secondary = false;
};

WitnessPolys witness_polys(const MomentEngine& eng, const WitnessRequest& r);

WitnessValue evaluate_witness(const WitnessRequest& r, const SystemConfig& cfg, const InitialAmplitudes& amps,
                              double t, WitnessForm form = WitnessForm::derived);

// Printed closed forms. Pump pairs need both members' tables, which
// `coefficients` already provides.
bool has_printed_form(const WitnessRequest& r, const SystemConfig& cfg);
WitnessValue printed_witness(const WitnessRequest& r, const SystemConfig& cfg, const CoefficientTables& c,
                             const InitialAmplitudes& amps);

// Precompiled witness set: per instant only the slow envelopes, a handful of
// distinct phases and one dot product per witness branch are evaluated.
class CompiledWitnessSet {
 public:
  CompiledWitnessSet(const SystemConfig& cfg, const InitialAmplitudes& amps, std::vector<WitnessRequest> reqs);

  const std::vector<WitnessRequest>& requests() const { return reqs_; }
  std::size_t size() const { return reqs_.size(); }
  // out[2*i] = primary, out[2*i+1] = secondary (0 when the witness has none)
  void evaluate(double t, double* out) const;
  std::vector<WitnessValue> evaluate(double t) const;

 private:
  struct Branch {
    std::vector<std::uint32_t> idx;
    std::vector<cplx> w;
  };
  SystemConfig cfg_;
  std::vector<WitnessRequest> reqs_;
  std::vector<bool> two_;
  std::vector<Branch> branches_;  // 2 per request
  // key table = (phase index, mono index)
  std::vector<std::array<std::int8_t, kMaxModes>> phases_;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> monos_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> keys_;
};

const char* witness_tag(WitnessKind k);

}  // namespace hr
