#pragma once

// Witness definitions written once over an abstract moment provider.
// mom(word) returns a value type S with +, -, *, scalar *, conj(), real().

#include <utility>

#include "hr/witness.hpp"

namespace hr::detail {

struct CVal {
  cplx v;
  CVal(cplx x = {}) : v(x) {}
  CVal conj() const { return std::conj(v); }
  CVal real() const { return cplx{v.real(), 0}; }
  friend CVal operator+(CVal a, CVal b) { return a.v + b.v; }
  friend CVal operator-(CVal a, CVal b) { return a.v - b.v; }
  friend CVal operator*(CVal a, CVal b) { return a.v * b.v; }
  friend CVal operator*(CVal a, double s) { return a.v * s; }
  friend CVal operator*(double s, CVal a) { return a.v * s; }
};

inline OpWord rep(int mode, bool dag, int n) { return OpWord(static_cast<std::size_t>(n), op_letter(mode, dag)); }
inline OpWord join(std::initializer_list<OpWord> parts) {
  OpWord w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

template <class S>
S ipow(const S& x, int n) {
  S r = x;
  for (int i = 1; i < n; ++i) r = r * x;
  return r;
}

// {primary, secondary}; secondary is meaningless for one-branch kinds
template <class S, class Mom>
std::pair<S, S> witness_branches(Mom&& mom, const WitnessRequest& r) {
  const int a = r.modes.at(0);
  switch (r.kind) {
    case WitnessKind::single_squeeze:
    case WitnessKind::amplitude_squeeze: {
      const int n = r.kind == WitnessKind::single_squeeze ? 1 : r.n;
      const S an = mom(rep(a, false, n));
      const S a2n = mom(rep(a, false, 2 * n));
      const S dn = mom(join({rep(a, true, n), rep(a, false, n)}));
      const S v2 = a2n - an * an;
      const S vn = dn - an.conj() * an;
      return {(v2.real() * 0.5 + vn * 0.5).real(), (v2.real() * -0.5 + vn * 0.5).real()};
    }
    case WitnessKind::pair_squeeze: {
      const int b = r.modes.at(1);
      const S am = mom({op_letter(a, false)}), bm = mom({op_letter(b, false)});
      const S v2 = (mom(rep(a, false, 2)) - am * am) + (mom(rep(b, false, 2)) - bm * bm) +
                   2.0 * (mom({op_letter(a, false), op_letter(b, false)}) - am * bm);
      const S vn = (mom({op_letter(a, true), op_letter(a, false)}) - am.conj() * am) +
                   (mom({op_letter(b, true), op_letter(b, false)}) - bm.conj() * bm) +
                   2.0 * (mom({op_letter(a, true), op_letter(b, false)}) - am.conj() * bm).real();
      return {(v2.real() * 0.25 + vn * 0.25).real(), (v2.real() * -0.25 + vn * 0.25).real()};
    }
    case WitnessKind::antibunch: {
      const S d = mom(join({rep(a, true, r.n), rep(a, false, r.n)})) -
                  ipow(mom({op_letter(a, true), op_letter(a, false)}), r.n);
      return {d.real(), S{}};
    }
    case WitnessKind::pair_antibunch: {
      const int b = r.modes.at(1);
      const S d = mom({op_letter(a, true), op_letter(b, true), op_letter(b, false), op_letter(a, false)}) -
                  mom({op_letter(a, true), op_letter(a, false)}) * mom({op_letter(b, true), op_letter(b, false)});
      return {d.real(), S{}};
    }
    case WitnessKind::hz: {
      const int b = r.modes.at(1), p = r.m, q = r.n;
      const S e1 = mom(join({rep(a, true, p), rep(a, false, p), rep(b, true, q), rep(b, false, q)}));
      const S x = mom(join({rep(a, false, p), rep(b, true, q)}));
      const S y = mom(join({rep(a, false, p), rep(b, false, q)}));
      const S E = e1 - x * x.conj();
      const S E2 = mom(join({rep(a, true, p), rep(a, false, p)})) * mom(join({rep(b, true, q), rep(b, false, q)})) -
                   y * y.conj();
      return {E.real(), E2.real()};
    }
  }
  return {};
}

}  // namespace hr::detail
