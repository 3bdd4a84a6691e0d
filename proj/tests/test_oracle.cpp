#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hr/compare.hpp"
#include "hr/oracle.hpp"

using namespace hr;

namespace {

const SystemConfig kCfg = SystemConfig::make({2.3}, 1.7, 0.9, 3.0, std::polar(1.0, 0.3), std::polar(0.8, -0.6));

}  // namespace

TEST_CASE("fock basis indexing") {
  FockBasis b({2, 3, 1});
  CHECK(b.dim == 3 * 4 * 2);
  for (std::size_t i = 0; i < b.dim; ++i) CHECK(b.index(b.occupation(i)) == i);
  CHECK(b.occ(b.index({2, 1, 1}), 1) == 1);
  CHECK(b.strides.back() == 1);
}

TEST_CASE("hamiltonian is hermitian and guarded by size") {
  FockBasis b({3, 3, 3, 3});
  CHECK(build_hamiltonian(kCfg, b).hermiticity_residual() < 1e-14);
  CHECK_THROWS(build_hamiltonian(kCfg, b, 10));
}

TEST_CASE("krylov propagation matches dense diagonalisation") {
  FockBasis b({3, 3, 2, 2});
  InitialAmplitudes a{{0.5}, 0.3, {0.1, 0.2}, 0.25};
  const Eigen::MatrixXcd H = Eigen::MatrixXcd(build_hamiltonian(kCfg, b).m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  const FockState s0 = coherent_state(a, b, 1.0);
  Propagator p(kCfg, b);
  const double t = 1.7;
  const FockState st = p.evolve(s0, t);

  const Eigen::VectorXcd phase = (es.eigenvalues().cast<cplx>() * cplx{0, -t}).array().exp();
  const Eigen::VectorXcd lab = es.eigenvectors() * (phase.asDiagonal() * (es.eigenvectors().adjoint() * s0.v));
  // <a_1> and <b+ c> in the lab frame
  auto dense = [&](const OpWord& w) {
    Eigen::VectorXcd x = lab;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const int m = *it / 2;
      const bool dag = *it & 1;
      Eigen::VectorXcd y = Eigen::VectorXcd::Zero(x.size());
      for (std::size_t i = 0; i < b.dim; ++i) {
        const int n = b.occ(i, m);
        const auto ii = static_cast<Eigen::Index>(i), st2 = static_cast<Eigen::Index>(b.strides[m]);
        if (dag && n < b.cutoffs[m]) y[ii + st2] += std::sqrt(n + 1.0) * x[ii];
        if (!dag && n > 0) y[ii - st2] += std::sqrt(double(n)) * x[ii];
      }
      x = y;
    }
    return lab.dot(x);
  };
  for (const OpWord& w : {OpWord{op_letter(0, false)}, OpWord{op_letter(1, true), op_letter(2, false)},
                          OpWord{op_letter(3, true), op_letter(3, false)}}) {
    CHECK(std::abs(moment(st, p, w) - dense(w)) < 1e-10);
  }
  CHECK(std::abs(p.energy(st) - p.energy(s0)) < 1e-10);
}

TEST_CASE("constants of motion are conserved by the oracle") {
  FockBasis b({6, 6, 5, 5});
  InitialAmplitudes a{{0.6}, 0.4, 0.1, 0.2};
  Propagator p(kCfg, b);
  const FockState s0 = coherent_state(a, b, 1e-4);
  const FockState s1 = p.evolve(s0, 2.0);
  const auto c0 = constants_of_motion(s0, b), c1 = constants_of_motion(s1, b);
  CHECK(std::abs(c1.c1[0] - c0.c1[0]) < 1e-10 * std::abs(c0.c1[0]));
  CHECK(std::abs(c1.c3 - c0.c3) < 1e-10);
  CHECK(std::abs(s1.v.norm() - 1) < 1e-12);
}

TEST_CASE("coherent state respects the tail bound") {
  FockBasis b({2, 2, 2, 2});
  InitialAmplitudes a{{2.0}, 0, 0, 0};
  CHECK_THROWS_AS(coherent_state(a, b, 1e-10), TruncationError);
  CHECK_NOTHROW(coherent_state(a, b, 1.0));
}

TEST_CASE("closed forms agree with the oracle at third order in gt") {
  // small amplitudes, generous cutoffs: the residual is the neglected third order
  const auto cfg = SystemConfig::make({12}, 8, 2, 13);
  InitialAmplitudes a{{0.5}, 0.4, 0.1, std::polar(0.2, 1.0)};
  std::vector<WitnessRequest> reqs;
  for (const char* id : {"sq:c", "pab:b-c", "hz11:b-c", "ab2:c"}) reqs.push_back(WitnessRequest::parse(id, cfg));
  CompareOptions o;
  o.cutoffs = {12, 12, 12, 12};
  const auto r = compare_with_oracle(cfg, a, reqs, {2e-3, 4e-3, 8e-3}, o);
  for (const auto& [id, slope] : r.slopes) {
    INFO(id);
    CHECK(slope == doctest::Approx(3).epsilon(0.1));
  }
  for (const auto& row : r.rows) CHECK(row.abs_residual < 1e-6);
}
