#include "hr/divdiff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace hr {

cplx phase_kernel(double x, double t) {
  const double th = x * t;
  const cplx it{0.0, t};
  if (std::abs(th) < kResonanceEps) {
    const cplx z{0.0, th};
    return it * (1.0 + z / 2.0 + z * z / 6.0);
  }
  // e^{i th} - 1 written without cancellation
  const double s = std::sin(th / 2);
  return cplx{-2 * s * s, std::sin(th)} / x;
}

namespace {

constexpr double kTaylorRadius = 0.5;

cplx taylor_divdiff(std::span<const cplx> z) {
  const std::size_t n = z.size() - 1;
  cplx c{};
  for (const cplx& v : z) c += v;
  c /= static_cast<double>(z.size());

  // h[m] = complete homogeneous polynomial of degree m in (z_i - c)
  constexpr int M = 40;
  std::array<cplx, M + 1> h{};
  h[0] = 1;
  double r = 0;
  for (const cplx& v : z) {
    const cplx x = v - c;
    r = std::max(r, std::abs(x));
    for (int m = 1; m <= M; ++m) h[m] += x * h[m - 1];
  }
  double fact = 1;  // (m + n)!
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<double>(i);
  // |h[m]| <= C(m+n, n) r^m, so the m-th term is bounded by r^m / (n! m!);
  // odd terms can vanish for symmetric nodes, hence no stop on a small term
  double bound = 1;
  for (std::size_t i = 2; i <= n; ++i) bound /= static_cast<double>(i);
  cplx sum{};
  for (int m = 0; m <= M; ++m) {
    if (m > 0) {
      fact *= static_cast<double>(m + n);
      bound *= r / m;
    }
    sum += h[m] / fact;
    if (bound < 1e-18 * std::abs(sum)) break;
  }
  return std::exp(c) * sum;
}

// points held in a small fixed buffer; at most four nodes are ever used
struct Nodes {
  std::array<cplx, 8> z{};
  std::size_t n = 0;
};

cplx divdiff_rec(const Nodes& z) {
  if (z.n == 1) return std::exp(z.z[0]);
  cplx c{};
  for (std::size_t i = 0; i < z.n; ++i) c += z.z[i];
  c /= static_cast<double>(z.n);
  double r = 0;
  for (std::size_t i = 0; i < z.n; ++i) r = std::max(r, std::abs(z.z[i] - c));
  if (r <= kTaylorRadius) return taylor_divdiff(std::span<const cplx>(z.z.data(), z.n));

  std::size_t p = 0, q = 1;
  double best = -1;
  for (std::size_t i = 0; i < z.n; ++i)
    for (std::size_t j = i + 1; j < z.n; ++j)
      if (std::abs(z.z[i] - z.z[j]) > best) {
        best = std::abs(z.z[i] - z.z[j]);
        p = i;
        q = j;
      }
  Nodes without_p, without_q;
  for (std::size_t i = 0; i < z.n; ++i) {
    if (i != p) without_p.z[without_p.n++] = z.z[i];
    if (i != q) without_q.z[without_q.n++] = z.z[i];
  }
  return (divdiff_rec(without_p) - divdiff_rec(without_q)) / (z.z[q] - z.z[p]);
}

}  // namespace

cplx exp_divdiff(std::span<const cplx> z) {
  if (z.empty() || z.size() > 8) throw std::invalid_argument("exp_divdiff: 1..8 nodes");
  Nodes v;
  for (const cplx& x : z) v.z[v.n++] = x;
  return divdiff_rec(v);
}

cplx kernel_p(double y, double t) { return phase_kernel(y, t); }

cplx kernel_q(double y, double z, double t) {
  const std::array<cplx, 3> pts{cplx{}, cplx{0, y * t}, cplx{0, z * t}};
  return -t * t * exp_divdiff(pts);
}

cplx kernel_p3(double a, double b, double c, double t) {
  const std::array<cplx, 4> pts{cplx{}, cplx{0, a * t}, cplx{0, b * t}, cplx{0, c * t}};
  return cplx{0, -t * t * t} * exp_divdiff(pts);
}

}  // namespace hr
