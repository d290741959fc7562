#pragma once

#include <complex>

namespace gl4 {

using cplx = std::complex<double>;

// log Gamma(z), principal-ish branch. Continuous on the right half plane;
// for Re z < 0.5 the reflection formula is used, so the imaginary part is
// only determined modulo 2*pi there. All consumers exponentiate sums of
// these values, which is insensitive to that ambiguity.
cplx log_gamma(cplx z);

// Gamma(z) via exp(log_gamma). Overflows to inf for large |Re z|.
cplx gamma(cplx z);

// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z);

// Distance from z to the nearest pole of Gamma (the points 0, -1, -2, ...).
double gamma_pole_distance(cplx z);

} // namespace gl4
