#include "hr/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hr {

int TermKey::order() const {
  int o = 0;
  if (l0 != kNoLetter) o += env_order(static_cast<Env>(l0 / 2));
  if (l1 != kNoLetter) o += env_order(static_cast<Env>(l1 / 2));
  return o;
}

TermKey TermKey::conj() const {
  TermKey k = *this;
  for (auto& p : k.phase) p = static_cast<std::int8_t>(-p);
  if (k.l0 != kNoLetter) k.l0 ^= 1;
  if (k.l1 != kNoLetter) k.l1 ^= 1;
  if (k.l1 < k.l0) std::swap(k.l0, k.l1);
  return k;
}

bool multiply_keys(const TermKey& a, const TermKey& b, TermKey& out) {
  std::uint8_t ls[4];
  int n = 0;
  for (std::uint8_t l : {a.l0, a.l1, b.l0, b.l1})
    if (l != kNoLetter) ls[n++] = l;
  if (n > 2) return false;
  int order = 0;
  for (int i = 0; i < n; ++i) order += env_order(static_cast<Env>(ls[i] / 2));
  if (order > 2) return false;
  for (int m = 0; m < kMaxModes; ++m) out.phase[m] = static_cast<std::int8_t>(a.phase[m] + b.phase[m]);
  out.l0 = n > 0 ? ls[0] : kNoLetter;
  out.l1 = n > 1 ? ls[1] : kNoLetter;
  if (out.l1 < out.l0) std::swap(out.l0, out.l1);
  return true;
}

// Poly ---------------------------------------------------------------------

Poly Poly::constant(cplx c) {
  Poly p;
  if (c != cplx{}) p.terms_.push_back({TermKey{}, c, std::abs(c)});
  return p;
}

void Poly::push(const TermKey& k, cplx w) { terms_.push_back({k, w, std::abs(w)}); }

void Poly::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const PolyTerm& a, const PolyTerm& b) { return a.key < b.key; });
  std::vector<PolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().key == t.key) {
      out.back().w += t.w;
      out.back().mag += t.mag;
    } else {
      out.push_back(t);
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& t : o.terms_) terms_.push_back({t.key, -t.w, t.mag});
  normalize();
  return *this;
}

Poly& Poly::operator*=(double s) {
  for (auto& t : terms_) {
    t.w *= s;
    t.mag *= std::abs(s);
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  auto& out = r.terms();
  out.reserve(a.terms().size() * b.terms().size());
  TermKey k;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms())
      if (multiply_keys(x.key, y.key, k)) out.push_back({k, x.w * y.w, x.mag * y.mag});
  r.normalize();
  return r;
}

Poly Poly::conj() const {
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.key.conj(), std::conj(t.w), t.mag});
  r.normalize();
  return r;
}

Poly Poly::real() const {
  Poly r = *this + conj();
  r *= 0.5;
  return r;
}

void Poly::clean(bool drop_order0) {
  // Relative floor well above accumulated rounding of a few hundred products
  constexpr double kCancel = 1e-12;
  std::erase_if(terms_, [&](const PolyTerm& t) {
    if (drop_order0 && t.key.order() == 0) return true;
    return std::abs(t.w) <= kCancel * t.mag;
  });
}

// Evaluation ---------------------------------------------------------------

EvalPoint eval_point(const SystemConfig& cfg, double t) {
  EvalPoint e;
  e.t = t;
  const Envelopes env = envelopes(cfg, t);
  for (int i = 0; i < kEnvCount; ++i) {
    e.letters[2 * i] = env.v[i];
    e.letters[2 * i + 1] = std::conj(env.v[i]);
  }
  for (int m = 0; m < cfg.modes(); ++m) e.omega[m] = cfg.omega(m);
  return e;
}

cplx key_value(const TermKey& k, const EvalPoint& e) {
  double w = 0;
  for (int m = 0; m < kMaxModes; ++m) w += k.phase[m] * e.omega[m];
  cplx v = std::polar(1.0, -w * e.t);
  if (k.l0 != kNoLetter) v *= e.letters[k.l0];
  if (k.l1 != kNoLetter) v *= e.letters[k.l1];
  return v;
}

cplx evaluate(const Poly& p, const EvalPoint& e) {
  cplx s{};
  for (const auto& t : p.terms()) s += t.w * key_value(t.key, e);
  return s;
}

// Coherent expectation -----------------------------------------------------

namespace {

// dp[o] = weight of paths with o annihilators still waiting for a partner
template <class Pred>
cplx wick_dp(const OpWord& w, Pred in_mode, cplx alpha) {
  constexpr int kMax = 96;
  std::array<cplx, kMax + 1> dp{}, nx{};
  dp[0] = 1;
  int open = 0;
  const cplx as = std::conj(alpha);
  for (std::uint8_t op : w) {
    if (!in_mode(op)) continue;
    const bool dag = op & 1;
    std::fill(nx.begin(), nx.begin() + open + 2, cplx{});
    if (!dag) {
      if (open + 1 > kMax) throw std::length_error("coherent_word: word too long");
      for (int o = 0; o <= open; ++o) {
        nx[o] += dp[o] * alpha;
        nx[o + 1] += dp[o];
      }
      ++open;
    } else {
      for (int o = 0; o <= open; ++o) {
        nx[o] += dp[o] * as;
        if (o > 0) nx[o - 1] += dp[o] * static_cast<double>(o);
      }
    }
    std::copy(nx.begin(), nx.begin() + open + 1, dp.begin());
  }
  return dp[0];
}

}  // namespace

cplx coherent_word(const std::vector<bool>& word, cplx alpha) {
  OpWord w;
  for (bool d : word) w.push_back(d ? 1 : 0);
  return wick_dp(w, [](std::uint8_t) { return true; }, alpha);
}

// Dressed operators ----------------------------------------------------------

MomentEngine::MomentEngine(const SystemConfig& cfg, const InitialAmplitudes& amps) : cfg_(cfg), amps_(amps) {
  if (cfg.modes() > kMaxModes) throw std::invalid_argument("MomentEngine: too many modes");
  if (static_cast<int>(amps.alpha.size()) != cfg.k) throw std::invalid_argument("MomentEngine: amplitude count");
  const int k = cfg.k, b = cfg.stokes(), c = cfg.vibration(), d = cfg.antistokes();
  ops_.assign(2 * cfg.modes(), {});

  auto A = [](int m) { return op_letter(m, false); };
  auto Ad = [](int m) { return op_letter(m, true); };
  auto cat = [](std::initializer_list<OpWord> parts) {
    OpWord w;
    for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
  };
  auto pumps_except = [k](int j) {
    std::vector<int> v;
    for (int i = 0; i < k; ++i)
      if (i != j) v.push_back(i);
    return v;
  };
  auto prod_word = [&](const std::vector<int>& ps, bool annihilate, bool create) {
    OpWord w;
    for (int i : ps) {
      if (create && annihilate) {
        w.push_back(Ad(i));
        w.push_back(A(i));
      } else if (annihilate) {
        w.push_back(A(i));
      } else {
        w.push_back(Ad(i));
      }
    }
    return w;
  };
  // Al over a pump set: +prod(a a+) - prod(a+ a)
  auto al_words = [&](const std::vector<int>& ps) {
    OpWord plus, minus;
    for (int i : ps) {
      plus.push_back(A(i));
      plus.push_back(Ad(i));
      minus.push_back(Ad(i));
      minus.push_back(A(i));
    }
    return std::pair{plus, minus};
  };

  auto add = [&](int mode, int env, bool conj, double sign, OpWord w) {
    DressedTerm t;
    t.key.phase[mode] = 1;
    if (env >= 0) t.key.l0 = letter(static_cast<Env>(env), conj);
    t.sign = sign;
    t.word = std::move(w);
    ops_[mode * 2].push_back(std::move(t));
  };
  auto add_al = [&](int mode, int env, bool conj, double sign, const std::vector<int>& ps, const OpWord& pre,
                    const OpWord& post) {
    auto [plus, minus] = al_words(ps);
    add(mode, env, conj, sign, cat({pre, plus, post}));
    add(mode, env, conj, -sign, cat({pre, minus, post}));
  };
  const auto E = [](Env e) { return static_cast<int>(e); };
  std::vector<int> all;
  for (int i = 0; i < k; ++i) all.push_back(i);
  const OpWord Aall = prod_word(all, true, false), Adall = prod_word(all, false, true), Nall = prod_word(all, true, true);

  for (int j = 0; j < k; ++j) {
    const auto rest = pumps_except(j);
    const OpWord B = prod_word(rest, false, true), N = prod_word(rest, true, true);
    const OpWord aj{A(j)};
    add(j, -1, false, 1, aj);
    add(j, E(Env::U), false, 1, cat({B, {A(b), A(c)}}));
    add(j, E(Env::V), false, 1, cat({B, {Ad(c), A(d)}}));
    add_al(j, E(Env::F4), false, 1, rest, aj, {Ad(b), A(b), Ad(c), A(c)});
    add(j, E(Env::F4), false, -1, cat({N, aj, {A(b), Ad(b)}}));
    add(j, E(Env::F4), false, -1, cat({N, aj, {Ad(c), A(c)}}));
    add(j, E(Env::F10), false, -1, cat({N, aj, {Ad(c), A(c)}}));
    add_al(j, E(Env::F7), false, 1, rest, aj, {A(b), A(c), A(c), Ad(d)});
    add(j, E(Env::F8), false, 1, cat({{Ad(j)}, B, B, {A(b), A(d)}}));
    add_al(j, E(Env::F9), false, 1, rest, aj, {Ad(b), Ad(c), Ad(c), A(d)});
    add(j, E(Env::F10), false, 1, cat({aj, N, {Ad(d), A(d)}}));
    add_al(j, E(Env::F10), false, 1, rest, aj, {A(c), Ad(c), Ad(d), A(d)});
  }

  add(b, -1, false, 1, {A(b)});
  add(b, E(Env::U), true, -1, cat({Aall, {Ad(c)}}));
  add(b, E(Env::G3), false, 1, cat({Aall, Aall, {Ad(d)}}));
  add(b, E(Env::F4), true, 1, cat({Nall, {A(b)}}));
  add_al(b, E(Env::F4), true, -1, all, {}, {A(b), Ad(c), A(c)});
  add_al(b, E(Env::F7), true, -1, all, {}, {Ad(c), Ad(c), A(d)});

  add(c, -1, false, 1, {A(c)});
  add(c, E(Env::U), true, -1, cat({Aall, {Ad(b)}}));
  add(c, E(Env::V), false, 1, cat({Adall, {A(d)}}));
  add(c, E(Env::F4), true, 1, cat({Nall, {A(c)}}));
  add(c, E(Env::F10), false, -1, cat({Nall, {A(c)}}));
  add_al(c, E(Env::F4), true, -1, all, {}, {Ad(b), A(b), A(c)});
  add_al(c, E(Env::H6), false, 1, all, {}, {Ad(b), Ad(c), A(d)});
  add_al(c, E(Env::F10), false, 1, all, {}, {A(c), Ad(d), A(d)});

  add(d, -1, false, 1, {A(d)});
  add(d, E(Env::V), true, -1, cat({Aall, {A(c)}}));
  add(d, E(Env::L3), false, 1, cat({Aall, Aall, {Ad(b)}}));
  add(d, E(Env::F10), true, -1, cat({Aall, Adall, {A(d)}}));
  add_al(d, E(Env::F9), true, -1, all, {}, {A(b), A(c), A(c)});
  add_al(d, E(Env::F10), true, -1, all, {}, {Ad(c), A(c), A(d)});

  // creation operators are the adjoints
  for (int m = 0; m < cfg.modes(); ++m) {
    for (const auto& t : ops_[m * 2]) {
      DressedTerm u;
      u.key = t.key.conj();
      u.sign = t.sign;
      u.word.assign(t.word.rbegin(), t.word.rend());
      for (auto& op : u.word) op ^= 1;
      ops_[m * 2 + 1].push_back(std::move(u));
    }
  }
}

cplx MomentEngine::word_expectation(const OpWord& w) const {
  cplx r{1, 0};
  std::uint32_t seen = 0;
  for (std::uint8_t op : w) seen |= 1u << (op / 2);
  for (int m = 0; m < cfg_.modes(); ++m) {
    if (!(seen & (1u << m))) continue;
    r *= wick_dp(w, [m](std::uint8_t op) { return op / 2 == m; }, amps_.at(m));
    if (r == cplx{}) break;
  }
  return r;
}

Poly MomentEngine::moment(const OpWord& word) const {
  Poly out;
  OpWord buf;
  buf.reserve(128);
  // depth-first over one dressed term per factor, total order <= 2
  auto rec = [&](auto&& self, std::size_t i, const TermKey& key, double sign) -> void {
    if (i == word.size()) {
      const cplx v = word_expectation(buf);
      if (v != cplx{}) out.push(key, sign * v);
      return;
    }
    for (const auto& t : ops_[word[i]]) {
      TermKey nk;
      if (!multiply_keys(key, t.key, nk)) continue;
      const std::size_t mark = buf.size();
      buf.insert(buf.end(), t.word.begin(), t.word.end());
      self(self, i + 1, nk, sign * t.sign);
      buf.resize(mark);
    }
  };
  rec(rec, 0, TermKey{}, 1.0);
  out.normalize();
  out.clean();
  return out;
}

}  // namespace hr
