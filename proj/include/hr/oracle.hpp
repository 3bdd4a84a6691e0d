#pragma once

// Exact reference: truncated multimode Fock space, Krylov propagation.
//
// The Hamiltonian splits as H = H0' + H_slow with
//   H0'    = sum w_i n_i + (S - w_c) n_b + w_c n_c + (S + w_c) n_d,  S = sum w_i
//   H_slow = H_I + D1 n_b - D2 n_d
// and [H0', H_I] = 0 exactly, also after truncation. States are stored in the
// frame rotating with H0'; moments pick up the free phase analytically, so
// large optical frequencies cost no accuracy.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hr/expansion.hpp"
#include "hr/model.hpp"
#include "hr/witness.hpp"

namespace hr {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FockBasis {
  std::vector<int> cutoffs;          // max occupation per mode
  std::vector<std::size_t> strides;  // last mode fastest
  std::size_t dim = 0;

  explicit FockBasis(std::vector<int> cutoffs);
  std::size_t index(const std::vector<int>& occ) const;
  std::vector<int> occupation(std::size_t idx) const;
  int modes() const { return static_cast<int>(cutoffs.size()); }
  int occ(std::size_t idx, int mode) const {
    return static_cast<int>((idx / strides[mode]) % static_cast<std::size_t>(cutoffs[mode] + 1));
  }
};

struct SparseOperator {
  Eigen::SparseMatrix<cplx, Eigen::RowMajor> m;
  double hermiticity_residual() const;
};

inline constexpr std::size_t kDefaultMaxDim = 4'000'000;

// Lab-frame H as an explicit sparse matrix (tests, small bases).
SparseOperator build_hamiltonian(const SystemConfig& cfg, const FockBasis& basis,
                                 std::size_t max_dim = kDefaultMaxDim);

struct FockState {
  Eigen::VectorXcd v;   // amplitudes in the H0' rotating frame
  double t = 0;         // elapsed time (frame phase is exp(-i H0' t))
  double norm = 1;
  double tail_mass = 0;  // largest marginal population on a cutoff shell
  bool valid = true;     // tail mass under the configured bound
};

FockState coherent_state(const InitialAmplitudes& amps, const FockBasis& basis, double tail_bound = 1e-10);

// Largest marginal population on any boundary shell.
double tail_mass(const Eigen::VectorXcd& v, const FockBasis& basis);

struct EvolveOptions {
  double tol = 1e-12;        // local Krylov error per step
  int krylov_dim = 30;
  double tail_bound = 1e-10;
  bool throw_on_tail = false;  // otherwise the state is flagged invalid
};

struct EvolveStats {
  int steps = 0;
  int matvecs = 0;
  double max_step_error = 0;
};

class Propagator {
 public:
  Propagator(const SystemConfig& cfg, const FockBasis& basis, std::size_t max_dim = kDefaultMaxDim);

  // y = H_slow x (matrix-free)
  void apply_slow(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  double h0_energy(std::size_t idx) const;  // diagonal of H0'
  const std::vector<double>& frame_frequencies() const { return w0_; }

  FockState evolve(const FockState& s, double dt, const EvolveOptions& o = {}, EvolveStats* stats = nullptr) const;

  // <H> in the lab frame
  double energy(const FockState& s) const;

  const FockBasis& basis() const { return basis_; }
  const SystemConfig& config() const { return cfg_; }

 private:
  SystemConfig cfg_;
  FockBasis basis_;
  std::vector<double> w0_;
  std::vector<double> slow_diag_w_;  // per-mode coefficient of n_m in H_slow
};

// Convenience wrapper
FockState evolve(const FockState& s, const Propagator& p, double dt, const EvolveOptions& o = {});

// (mode, creation power, annihilation power), factors multiply left to right.
struct MomentDescriptor {
  std::vector<std::tuple<int, int, int>> factors;
};

OpWord to_word(const MomentDescriptor& d);

// <psi| word |psi> in the lab frame.
cplx moment(const FockState& s, const Propagator& p, const OpWord& word);
cplx moment(const FockState& s, const Propagator& p, const MomentDescriptor& d);

// Memoizing moment provider for one state.
class OracleMoments {
 public:
  OracleMoments(const FockState& s, const Propagator& p) : s_(s), p_(p) {}
  cplx operator()(const OpWord& w) const;

 private:
  const FockState& s_;
  const Propagator& p_;
  mutable std::map<OpWord, cplx> cache_;
};

WitnessValue witnesses_from_moments(const FockState& s, const Propagator& p, const WitnessRequest& r);
WitnessValue witnesses_from_moments(const OracleMoments& mom, const WitnessRequest& r);

struct ConstantsOfMotion {
  std::vector<double> c1;  // per pump j: n_j + n_b + n_d
  std::vector<double> c2;  // per pump j >= 1: n_0 - n_j
  double c3 = 0;           // n_c + n_d - n_b
};

ConstantsOfMotion constants_of_motion(const FockState& s, const FockBasis& basis);
double mean_occupation(const FockState& s, const FockBasis& basis, int mode);

}  // namespace hr
