#pragma once

#include <complex>
#include <span>

namespace hr {

using cplx = std::complex<double>;

// Below this |x t| the phase kernel switches to its Taylor series.
inline constexpr double kResonanceEps = 1e-6;

// (exp(i x t) - 1) / x, continuous through x = 0.
cplx phase_kernel(double x, double t);

// Divided difference exp[z0, ..., zn]. Clustered points use a Taylor series
// about the centroid; spread points recurse on the farthest pair.
cplx exp_divdiff(std::span<const cplx> z);

// Building blocks of every perturbative envelope.
//   P(y)       = (e^{iyt} - 1)/y
//   Q(y,z)     = (P(y) - P(z))/(y - z)
//   P3(a,b,c)  = (Q(a,b) - Q(a,c))/(b - c)
// All are entire in their arguments; no resonance is singular.
cplx kernel_p(double y, double t);
cplx kernel_q(double y, double z, double t);
cplx kernel_p3(double a, double b, double c, double t);

}  // namespace hr
