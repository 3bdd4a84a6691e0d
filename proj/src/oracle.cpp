#include "hr/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "witness_defs.hpp"

namespace hr {

FockBasis::FockBasis(std::vector<int> c) : cutoffs(std::move(c)) {
  if (cutoffs.empty()) throw std::invalid_argument("FockBasis: no modes");
  strides.assign(cutoffs.size(), 1);
  double d = 1;
  for (int n : cutoffs) {
    if (n < 1) throw std::invalid_argument("FockBasis: cutoffs must be >= 1");
    d *= n + 1;
  }
  if (d > 1e9) throw std::invalid_argument("FockBasis: dimension too large");
  for (int m = static_cast<int>(cutoffs.size()) - 2; m >= 0; --m) strides[m] = strides[m + 1] * (cutoffs[m + 1] + 1);
  dim = static_cast<std::size_t>(d);
}

std::size_t FockBasis::index(const std::vector<int>& occ) const {
  if (occ.size() != cutoffs.size()) throw std::invalid_argument("FockBasis::index: wrong mode count");
  std::size_t i = 0;
  for (std::size_t m = 0; m < occ.size(); ++m) {
    if (occ[m] < 0 || occ[m] > cutoffs[m]) throw std::out_of_range("FockBasis::index: occupation out of range");
    i += occ[m] * strides[m];
  }
  return i;
}

std::vector<int> FockBasis::occupation(std::size_t idx) const {
  if (idx >= dim) throw std::out_of_range("FockBasis::occupation");
  std::vector<int> o(cutoffs.size());
  for (int m = 0; m < modes(); ++m) o[m] = occ(idx, m);
  return o;
}

namespace {

void check_basis(const SystemConfig& cfg, const FockBasis& basis, std::size_t max_dim) {
  if (basis.modes() != cfg.modes()) throw std::invalid_argument("basis/config mode count mismatch");
  if (basis.dim > max_dim) throw std::invalid_argument("Fock dimension exceeds the memory budget");
}

// Visits every interaction matrix element <to|H_I|from> = val.
template <class F>
void for_each_interaction(const SystemConfig& cfg, const FockBasis& B, std::size_t from, F&& emit) {
  const int k = cfg.k, b = cfg.stokes(), c = cfg.vibration(), d = cfg.antistokes();
  int n[kMaxModes];
  for (int m = 0; m < B.modes(); ++m) n[m] = B.occ(from, m);
  double lower = 1, raise = 1;  // prod sqrt(n_i), prod sqrt(n_i + 1)
  bool can_lower = true, can_raise = true;
  std::ptrdiff_t pump_stride = 0;
  for (int i = 0; i < k; ++i) {
    can_lower &= n[i] >= 1;
    can_raise &= n[i] < B.cutoffs[i];
    lower *= std::sqrt(static_cast<double>(n[i]));
    raise *= std::sqrt(static_cast<double>(n[i] + 1));
    pump_stride += static_cast<std::ptrdiff_t>(B.strides[i]);
  }
  const auto sb = static_cast<std::ptrdiff_t>(B.strides[b]), sc = static_cast<std::ptrdiff_t>(B.strides[c]),
             sd = static_cast<std::ptrdiff_t>(B.strides[d]);
  const auto f = static_cast<std::ptrdiff_t>(from);
  // -g A b+ c+
  if (can_lower && n[b] < B.cutoffs[b] && n[c] < B.cutoffs[c])
    emit(f - pump_stride + sb + sc, -cfg.g * lower * std::sqrt((n[b] + 1.0) * (n[c] + 1.0)));
  // -g* A+ b c
  if (can_raise && n[b] >= 1 && n[c] >= 1)
    emit(f + pump_stride - sb - sc, -std::conj(cfg.g) * raise * std::sqrt(double(n[b]) * n[c]));
  // -chi* A c d+
  if (can_lower && n[c] >= 1 && n[d] < B.cutoffs[d])
    emit(f - pump_stride - sc + sd, -std::conj(cfg.chi) * lower * std::sqrt(n[c] * (n[d] + 1.0)));
  // -chi A+ c+ d
  if (can_raise && n[c] < B.cutoffs[c] && n[d] >= 1)
    emit(f + pump_stride + sc - sd, -cfg.chi * raise * std::sqrt((n[c] + 1.0) * n[d]));
}

}  // namespace

double SparseOperator::hermiticity_residual() const {
  const Eigen::SparseMatrix<cplx, Eigen::RowMajor> adj = m.adjoint();
  double r = 0;
  const Eigen::SparseMatrix<cplx, Eigen::RowMajor> diff = m - adj;
  for (int i = 0; i < diff.outerSize(); ++i)
    for (Eigen::SparseMatrix<cplx, Eigen::RowMajor>::InnerIterator it(diff, i); it; ++it)
      r = std::max(r, std::abs(it.value()));
  return r;
}

SparseOperator build_hamiltonian(const SystemConfig& cfg, const FockBasis& basis, std::size_t max_dim) {
  check_basis(cfg, basis, max_dim);
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(basis.dim * 5);
  for (std::size_t s = 0; s < basis.dim; ++s) {
    double e = 0;
    for (int m = 0; m < basis.modes(); ++m) e += cfg.omega(m) * basis.occ(s, m);
    if (e != 0) trip.emplace_back(static_cast<int>(s), static_cast<int>(s), e);
    for_each_interaction(cfg, basis, s, [&](std::ptrdiff_t to, cplx v) {
      trip.emplace_back(static_cast<int>(to), static_cast<int>(s), v);
    });
  }
  SparseOperator op;
  op.m.resize(static_cast<int>(basis.dim), static_cast<int>(basis.dim));
  op.m.setFromTriplets(trip.begin(), trip.end());
  return op;
}

double tail_mass(const Eigen::VectorXcd& v, const FockBasis& basis) {
  std::vector<double> shell(basis.modes(), 0.0);
  for (std::size_t s = 0; s < basis.dim; ++s) {
    const double p = std::norm(v[static_cast<Eigen::Index>(s)]);
    if (p == 0) continue;
    for (int m = 0; m < basis.modes(); ++m)
      if (basis.occ(s, m) == basis.cutoffs[m]) shell[m] += p;
  }
  return *std::max_element(shell.begin(), shell.end());
}

FockState coherent_state(const InitialAmplitudes& amps, const FockBasis& basis, double tail_bound) {
  if (amps.modes() != basis.modes()) throw std::invalid_argument("coherent_state: amplitude/basis mismatch");
  std::vector<std::vector<cplx>> per(basis.modes());
  double worst = 0;
  for (int m = 0; m < basis.modes(); ++m) {
    const cplx a = amps.at(m);
    const int N = basis.cutoffs[m];
    auto& c = per[m];
    c.resize(N + 1);
    c[0] = std::exp(-std::norm(a) / 2);
    for (int n = 1; n <= N; ++n) c[n] = c[n - 1] * a / std::sqrt(static_cast<double>(n));
    double nrm = 0;
    for (const auto& x : c) nrm += std::norm(x);
    for (auto& x : c) x /= std::sqrt(nrm);
    worst = std::max(worst, std::norm(c[N]));
  }
  if (worst > tail_bound)
    throw TruncationError("coherent_state: boundary population " + std::to_string(worst) + " exceeds bound");
  FockState s;
  s.v.resize(static_cast<Eigen::Index>(basis.dim));
  for (std::size_t i = 0; i < basis.dim; ++i) {
    cplx x{1, 0};
    for (int m = 0; m < basis.modes(); ++m) x *= per[m][basis.occ(i, m)];
    s.v[static_cast<Eigen::Index>(i)] = x;
  }
  s.norm = s.v.norm();
  s.tail_mass = worst;
  return s;
}

// Propagator ---------------------------------------------------------------

Propagator::Propagator(const SystemConfig& cfg, const FockBasis& basis, std::size_t max_dim)
    : cfg_(cfg), basis_(basis) {
  check_basis(cfg, basis, max_dim);
  const double S = cfg.pump_sum(), wc = cfg.omega_c;
  const Detunings dt = detunings(cfg);
  w0_.assign(cfg.modes(), 0.0);
  slow_diag_w_.assign(cfg.modes(), 0.0);
  for (int i = 0; i < cfg.k; ++i) w0_[i] = cfg.omega_pump[i];
  w0_[cfg.stokes()] = S - wc;
  w0_[cfg.vibration()] = wc;
  w0_[cfg.antistokes()] = S + wc;
  slow_diag_w_[cfg.stokes()] = dt.delta1;
  slow_diag_w_[cfg.antistokes()] = -dt.delta2;
}

double Propagator::h0_energy(std::size_t idx) const {
  double e = 0;
  for (int m = 0; m < basis_.modes(); ++m) e += w0_[m] * basis_.occ(idx, m);
  return e;
}

void Propagator::apply_slow(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  const auto& B = basis_;
  y.setZero(x.size());
  const int b = cfg_.stokes(), d = cfg_.antistokes();
  const double wb = slow_diag_w_[b], wd = slow_diag_w_[d];
  for (std::size_t s = 0; s < B.dim; ++s) {
    const cplx xs = x[static_cast<Eigen::Index>(s)];
    if (xs == cplx{}) continue;
    y[static_cast<Eigen::Index>(s)] += (wb * B.occ(s, b) + wd * B.occ(s, d)) * xs;
    for_each_interaction(cfg_, B, s, [&](std::ptrdiff_t to, cplx v) { y[to] += v * xs; });
  }
}

double Propagator::energy(const FockState& s) const {
  Eigen::VectorXcd hv;
  apply_slow(s.v, hv);
  double e = s.v.dot(hv).real();
  for (std::size_t i = 0; i < basis_.dim; ++i) e += h0_energy(i) * std::norm(s.v[static_cast<Eigen::Index>(i)]);
  return e;
}

FockState Propagator::evolve(const FockState& s0, double T, const EvolveOptions& o, EvolveStats* stats) const {
  if (T < 0) throw std::invalid_argument("evolve: negative time");
  FockState s = s0;
  const Eigen::Index N = s.v.size();
  const int mmax = std::max(2, o.krylov_dim);
  Eigen::MatrixXcd V(N, mmax + 1);
  Eigen::VectorXcd w;
  double done = 0;
  EvolveStats st;
  while (done < T) {
    const double beta0 = s.v.norm();
    V.col(0) = s.v / beta0;
    std::vector<double> alpha, beta;
    int m = 0;
    double beta_last = 0;
    for (; m < mmax; ++m) {
      apply_slow(V.col(m), w);
      ++st.matvecs;
      // full reorthogonalisation, two passes of classical Gram-Schmidt
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXcd h = V.leftCols(m + 1).adjoint() * w;
        w.noalias() -= V.leftCols(m + 1) * h;
        if (pass == 0) alpha.push_back(h[m].real());
        else alpha.back() += h[m].real();
      }
      beta_last = w.norm();
      if (beta_last < 1e-13) {
        ++m;
        beta_last = 0;
        break;
      }
      beta.push_back(beta_last);
      V.col(m + 1) = w / beta_last;
    }
    const int dim = m;
    Eigen::MatrixXd Tm = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      Tm(i, i) = alpha[i];
      if (i + 1 < dim) Tm(i, i + 1) = Tm(i + 1, i) = beta[i];
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Tm);
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXd& U = es.eigenvectors();
    // a posteriori estimate: beta_m |e_m^T exp(-i T dt) e_1|
    auto coeffs = [&](double dt) {
      Eigen::VectorXcd c(dim);
      for (int i = 0; i < dim; ++i) c[i] = std::polar(U(0, i), -lam[i] * dt);
      return Eigen::VectorXcd(U.cast<cplx>() * c);
    };
    double dt = T - done;
    Eigen::VectorXcd y;
    double err = 0;
    for (;;) {
      y = coeffs(dt);
      err = beta_last * std::abs(y[dim - 1]);
      if (err <= o.tol) break;
      dt *= 0.5;
      if (dt < 1e-15 * std::max(T, 1.0)) throw std::runtime_error("evolve: step-size underflow");
    }
    s.v = beta0 * (V.leftCols(dim) * y);
    done = (T - done - dt) <= 1e-15 * T ? T : done + dt;
    ++st.steps;
    st.max_step_error = std::max(st.max_step_error, err);
  }
  s.t = s0.t + T;
  s.norm = s.v.norm();
  s.tail_mass = tail_mass(s.v, basis_);
  s.valid = s0.valid && s.tail_mass <= o.tail_bound;
  if (!s.valid && o.throw_on_tail)
    throw TruncationError("evolve: boundary population " + std::to_string(s.tail_mass) + " exceeds bound");
  if (stats) *stats = st;
  return s;
}

FockState evolve(const FockState& s, const Propagator& p, double dt, const EvolveOptions& o) {
  return p.evolve(s, dt, o);
}

// Moments ------------------------------------------------------------------

OpWord to_word(const MomentDescriptor& d) {
  OpWord w;
  for (const auto& [mode, cr, an] : d.factors) {
    if (cr < 0 || an < 0) throw std::invalid_argument("MomentDescriptor: negative power");
    for (int i = 0; i < cr; ++i) w.push_back(op_letter(mode, true));
    for (int i = 0; i < an; ++i) w.push_back(op_letter(mode, false));
  }
  return w;
}

namespace {

// single-mode normal ordering: sum of c * a+^p a^q
using NormalForm = std::map<std::pair<int, int>, double>;

NormalForm normal_order(const std::vector<bool>& dags) {
  NormalForm nf{{{0, 0}, 1.0}};
  for (bool dag : dags) {
    NormalForm next;
    for (const auto& [pq, c] : nf) {
      const auto [pp, q] = pq;
      if (!dag) {
        next[{pp, q + 1}] += c;
      } else {
        // a^q a+ = a+ a^q + q a^(q-1)
        next[{pp + 1, q}] += c;
        if (q > 0) next[{pp, q - 1}] += c * q;
      }
    }
    nf.swap(next);
  }
  return nf;
}

void apply_lowering(const FockBasis& B, int mode, Eigen::VectorXcd& x, Eigen::VectorXcd& y) {
  const auto st = static_cast<Eigen::Index>(B.strides[mode]);
  y.setZero();
  for (std::size_t i = 0; i < B.dim; ++i) {
    const cplx xi = x[static_cast<Eigen::Index>(i)];
    if (xi == cplx{}) continue;
    const int n = B.occ(i, mode);
    if (n > 0) y[static_cast<Eigen::Index>(i) - st] += std::sqrt(static_cast<double>(n)) * xi;
  }
  x.swap(y);
}

Eigen::VectorXcd lowered(const FockBasis& B, const Eigen::VectorXcd& v, const std::vector<int>& powers) {
  Eigen::VectorXcd x = v, y(v.size());
  for (int m = 0; m < B.modes(); ++m)
    for (int k = 0; k < powers[m]; ++k) apply_lowering(B, m, x, y);
  return x;
}

}  // namespace

// The word is normal ordered mode by mode first, so each term is
// <a^p psi, a^q psi> and only lowering operators touch the truncated state.
// Creation operators never hit the cutoff shell this way.
cplx moment(const FockState& s, const Propagator& p, const OpWord& word) {
  const FockBasis& B = p.basis();
  const int M = B.modes();
  std::vector<std::vector<bool>> per_mode(M);
  double wsum = 0;
  for (auto l : word) {
    const int mode = l / 2;
    const bool dag = l & 1;
    if (mode >= M) throw std::invalid_argument("moment: mode out of range");
    wsum += (dag ? -1.0 : 1.0) * p.frame_frequencies()[mode];
    per_mode[mode].push_back(dag);
  }
  std::vector<NormalForm> forms;
  for (const auto& d : per_mode) forms.push_back(normal_order(d));

  // expand the product of per-mode sums
  cplx total{};
  std::vector<int> pw(M), qw(M);
  std::map<std::vector<int>, Eigen::VectorXcd> cache;
  auto vec = [&](const std::vector<int>& k) -> const Eigen::VectorXcd& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, lowered(B, s.v, k)).first;
    return it->second;
  };
  auto rec = [&](auto&& self, int m, double c) -> void {
    if (m == M) {
      total += c * vec(pw).dot(vec(qw));
      return;
    }
    for (const auto& [pq, cm] : forms[m]) {
      pw[m] = pq.first;
      qw[m] = pq.second;
      self(self, m + 1, c * cm);
    }
  };
  rec(rec, 0, 1.0);
  // the rotating frame contributes exp(-i t sum_m p_m w0_m)
  return std::polar(1.0, -wsum * s.t) * total;
}

cplx moment(const FockState& s, const Propagator& p, const MomentDescriptor& d) { return moment(s, p, to_word(d)); }

cplx OracleMoments::operator()(const OpWord& w) const {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  const cplx v = moment(s_, p_, w);
  cache_.emplace(w, v);
  return v;
}

WitnessValue witnesses_from_moments(const OracleMoments& mom, const WitnessRequest& r) {
  auto f = [&](const OpWord& w) { return detail::CVal(mom(w)); };
  const auto [p, s] = detail::witness_branches<detail::CVal>(f, r);
  WitnessValue v;
  v.primary = p.v.real();
  if (r.two_branch()) v.secondary = s.v.real();
  v.equation_tag = std::string(witness_tag(r.kind)) + " [oracle]";
  v.nonclassical = v.primary < 0 || (v.secondary && *v.secondary < 0);
  return v;
}

WitnessValue witnesses_from_moments(const FockState& s, const Propagator& p, const WitnessRequest& r) {
  validate_request(r, p.config());
  return witnesses_from_moments(OracleMoments(s, p), r);
}

double mean_occupation(const FockState& s, const FockBasis& basis, int mode) {
  double n = 0;
  for (std::size_t i = 0; i < basis.dim; ++i) n += basis.occ(i, mode) * std::norm(s.v[static_cast<Eigen::Index>(i)]);
  return n;
}

ConstantsOfMotion constants_of_motion(const FockState& s, const FockBasis& basis) {
  const int M = basis.modes(), k = M - 3;
  std::vector<double> n(M);
  for (int m = 0; m < M; ++m) n[m] = mean_occupation(s, basis, m);
  ConstantsOfMotion c;
  for (int j = 0; j < k; ++j) c.c1.push_back(n[j] + n[k] + n[k + 2]);
  for (int j = 1; j < k; ++j) c.c2.push_back(n[0] - n[j]);
  c.c3 = n[k + 1] + n[k + 2] - n[k];
  return c;
}

}  // namespace hr
