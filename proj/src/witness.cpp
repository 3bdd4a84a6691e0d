#include "hr/witness.hpp"

#include <map>
#include <regex>
#include <stdexcept>

#include "witness_defs.hpp"

namespace hr {

const char* witness_tag(WitnessKind k) {
  switch (k) {
    case WitnessKind::single_squeeze: return "quadrature squeezing X/Y";
    case WitnessKind::pair_squeeze: return "two-mode squeezing X/Y";
    case WitnessKind::amplitude_squeeze: return "amplitude-powered squeezing A1/A2";
    case WitnessKind::antibunch: return "higher-order antibunching D(n-1)";
    case WitnessKind::pair_antibunch: return "intermodal antibunching D";
    case WitnessKind::hz: return "HZ-I/HZ-II";
  }
  return "";
}

bool WitnessRequest::two_branch() const {
  return kind != WitnessKind::antibunch && kind != WitnessKind::pair_antibunch;
}

std::string WitnessRequest::id(const SystemConfig& cfg) const {
  auto nm = [&](std::size_t i) { return cfg.mode_name(modes.at(i)); };
  switch (kind) {
    case WitnessKind::single_squeeze: return "sq:" + nm(0);
    case WitnessKind::pair_squeeze: return "psq:" + nm(0) + "-" + nm(1);
    case WitnessKind::amplitude_squeeze: return "asq" + std::to_string(n) + ":" + nm(0);
    case WitnessKind::antibunch: return "ab" + std::to_string(n) + ":" + nm(0);
    case WitnessKind::pair_antibunch: return "pab:" + nm(0) + "-" + nm(1);
    case WitnessKind::hz: return "hz" + std::to_string(m) + std::to_string(n) + ":" + nm(0) + "-" + nm(1);
  }
  return {};
}

WitnessRequest WitnessRequest::parse(const std::string& id, const SystemConfig& cfg) {
  static const std::regex re(R"(^(sq|psq|asq|ab|pab|hz)([0-9]*):([a-z0-9]+)(?:-([a-z0-9]+))?$)");
  std::smatch mt;
  if (!std::regex_match(id, mt, re)) throw std::invalid_argument("bad witness id: " + id);
  WitnessRequest r;
  const std::string kind = mt[1], num = mt[2];
  r.modes.push_back(cfg.mode_index(mt[3]));
  if (mt[4].matched) r.modes.push_back(cfg.mode_index(mt[4]));
  auto need_num = [&](std::size_t len) {
    if (num.size() != len) throw std::invalid_argument("bad witness order in id: " + id);
  };
  if (kind == "sq") {
    need_num(0);
    r.kind = WitnessKind::single_squeeze;
  } else if (kind == "psq") {
    need_num(0);
    r.kind = WitnessKind::pair_squeeze;
  } else if (kind == "pab") {
    need_num(0);
    r.kind = WitnessKind::pair_antibunch;
  } else if (kind == "asq" || kind == "ab") {
    if (num.empty()) throw std::invalid_argument("missing order in id: " + id);
    r.kind = kind == "asq" ? WitnessKind::amplitude_squeeze : WitnessKind::antibunch;
    r.n = std::stoi(num);
  } else {
    need_num(2);
    r.kind = WitnessKind::hz;
    r.m = num[0] - '0';
    r.n = num[1] - '0';
  }
  validate_request(r, cfg);
  return r;
}

void validate_request(const WitnessRequest& r, const SystemConfig& cfg) {
  const bool pair = r.kind == WitnessKind::pair_squeeze || r.kind == WitnessKind::pair_antibunch ||
                    r.kind == WitnessKind::hz;
  if (r.modes.size() != (pair ? 2u : 1u)) throw std::invalid_argument("witness: wrong number of modes");
  for (int m : r.modes)
    if (m < 0 || m >= cfg.modes()) throw std::invalid_argument("witness: mode out of range");
  if (pair && r.modes[0] == r.modes[1]) throw std::invalid_argument("witness: pair needs two distinct modes");
  switch (r.kind) {
    case WitnessKind::amplitude_squeeze:
      if (r.n < 1) throw std::invalid_argument("amplitude squeezing needs n >= 1");
      break;
    case WitnessKind::antibunch:
      if (r.n < 2) throw std::invalid_argument("antibunching needs n >= 2");
      break;
    case WitnessKind::hz:
      if (r.m < 1 || r.n < 1 || r.m > 9 || r.n > 9) throw std::invalid_argument("HZ needs 1 <= m, n <= 9");
      break;
    default: break;
  }
}

std::vector<WitnessRequest> witness_catalog(const SystemConfig& cfg, int max_order) {
  std::vector<WitnessRequest> v;
  const int M = cfg.modes();
  for (int a = 0; a < M; ++a) {
    v.push_back({WitnessKind::single_squeeze, {a}, 0, 0});
    for (int n = 2; n <= max_order; ++n) v.push_back({WitnessKind::amplitude_squeeze, {a}, 0, n});
    for (int n = 2; n <= max_order; ++n) v.push_back({WitnessKind::antibunch, {a}, 0, n});
  }
  for (int a = 0; a < M; ++a)
    for (int b = a + 1; b < M; ++b) {
      v.push_back({WitnessKind::pair_squeeze, {a, b}, 0, 0});
      v.push_back({WitnessKind::pair_antibunch, {a, b}, 0, 0});
      for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q) v.push_back({WitnessKind::hz, {a, b}, p, q});
    }
  return v;
}

WitnessPolys witness_polys(const MomentEngine& eng, const WitnessRequest& r) {
  validate_request(r, eng.config());
  auto mom = [&](const OpWord& w) { return eng.moment(w); };
  auto [p, s] = detail::witness_branches<Poly>(mom, r);
  // the zeroth order cancels identically for coherent input
  p.clean(true);
  s.clean(true);
  WitnessPolys out;
  out.primary = std::move(p);
  out.has_secondary = r.two_branch();
  if (out.has_secondary) out.secondary = std::move(s);
  return out;
}

namespace {

WitnessValue finish(double p, std::optional<double> s, std::string tag) {
  WitnessValue v;
  v.primary = p;
  v.secondary = s;
  v.equation_tag = std::move(tag);
  v.nonclassical = p < 0 || (s && *s < 0);
  return v;
}

}  // namespace

WitnessValue evaluate_witness(const WitnessRequest& r, const SystemConfig& cfg, const InitialAmplitudes& amps,
                              double t, WitnessForm form) {
  validate_request(r, cfg);
  if (form == WitnessForm::printed) return printed_witness(r, cfg, coefficients(cfg, t), amps);
  const MomentEngine eng(cfg, amps);
  const WitnessPolys wp = witness_polys(eng, r);
  const EvalPoint ep = eval_point(cfg, t);
  const double p = evaluate(wp.primary, ep).real();
  std::optional<double> s;
  if (wp.has_secondary) s = evaluate(wp.secondary, ep).real();
  return finish(p, s, std::string(witness_tag(r.kind)) + " [derived]");
}

// Compiled set -------------------------------------------------------------

CompiledWitnessSet::CompiledWitnessSet(const SystemConfig& cfg, const InitialAmplitudes& amps,
                                       std::vector<WitnessRequest> reqs)
    : cfg_(cfg), reqs_(std::move(reqs)) {
  const MomentEngine eng(cfg, amps);
  std::map<std::array<std::int8_t, kMaxModes>, std::uint32_t> ph;
  std::map<std::pair<std::uint8_t, std::uint8_t>, std::uint32_t> mo;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ke;
  auto intern = [](auto& map, auto& vec, const auto& key) {
    auto [it, fresh] = map.try_emplace(key, static_cast<std::uint32_t>(vec.size()));
    if (fresh) vec.push_back(key);
    return it->second;
  };
  auto compile = [&](const Poly& p) {
    Branch b;
    for (const auto& t : p.terms()) {
      const std::uint32_t pi = intern(ph, phases_, t.key.phase);
      const std::uint32_t mi = intern(mo, monos_, std::pair{t.key.l0, t.key.l1});
      b.idx.push_back(intern(ke, keys_, std::pair{pi, mi}));
      b.w.push_back(t.w);
    }
    return b;
  };
  for (const auto& r : reqs_) {
    const WitnessPolys wp = witness_polys(eng, r);
    two_.push_back(wp.has_secondary);
    branches_.push_back(compile(wp.primary));
    branches_.push_back(wp.has_secondary ? compile(wp.secondary) : Branch{});
  }
}

void CompiledWitnessSet::evaluate(double t, double* out) const {
  thread_local std::vector<cplx> pv, mv, kv;
  const Envelopes env = envelopes(cfg_, t);
  std::array<cplx, 2 * kEnvCount + 1> lv;
  for (int i = 0; i < kEnvCount; ++i) {
    lv[2 * i] = env.v[i];
    lv[2 * i + 1] = std::conj(env.v[i]);
  }
  pv.resize(phases_.size());
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    double w = 0;
    for (int m = 0; m < cfg_.modes(); ++m) w += phases_[i][m] * cfg_.omega(m);
    pv[i] = std::polar(1.0, -w * t);
  }
  mv.resize(monos_.size());
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    cplx v{1, 0};
    if (monos_[i].first != kNoLetter) v *= lv[monos_[i].first];
    if (monos_[i].second != kNoLetter) v *= lv[monos_[i].second];
    mv[i] = v;
  }
  kv.resize(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) kv[i] = pv[keys_[i].first] * mv[keys_[i].second];
  for (std::size_t b = 0; b < branches_.size(); ++b) {
    const Branch& br = branches_[b];
    double s = 0;
    for (std::size_t i = 0; i < br.idx.size(); ++i) {
      const cplx& x = kv[br.idx[i]];
      s += br.w[i].real() * x.real() - br.w[i].imag() * x.imag();
    }
    out[b] = s;
  }
}

std::vector<WitnessValue> CompiledWitnessSet::evaluate(double t) const {
  std::vector<double> buf(branches_.size());
  evaluate(t, buf.data());
  std::vector<WitnessValue> v;
  v.reserve(reqs_.size());
  for (std::size_t i = 0; i < reqs_.size(); ++i) {
    std::optional<double> s;
    if (two_[i]) s = buf[2 * i + 1];
    v.push_back(finish(buf[2 * i], s, std::string(witness_tag(reqs_[i].kind)) + " [derived]"));
  }
  return v;
}

}  // namespace hr
