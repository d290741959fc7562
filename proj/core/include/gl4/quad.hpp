#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gl4 {

using cplx = std::complex<double>;

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
struct GaussLegendre {
    std::vector<double> node;
    std::vector<double> weight;
    static const GaussLegendre& get(int order);
};

// integral of f over [a, b] with one n-point panel
cplx gl_panel(const std::function<cplx(double)>& f, double a, double b, int order);

// Adaptive panel integration: splits until two refinement levels agree to
// rel_tol (relative to the accumulated absolute mass). Throws
// truncation_error if max_depth is hit with the target unmet.
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               double rel_tol = 1e-12, int order = 24, int max_depth = 18);

struct LineIntegral {
    cplx value;
    double tail_bound; // estimated modulus of the discarded |t| > t_max tail
};

// (1/2*pi*i) * Integral of F over the vertical line Re s = sigma.
// The line is covered by panels of height `panel_h` out to +-t_max; t_max is
// doubled until the last panel pair is below tail_frac of the running total,
// and the tail is then estimated by geometric extrapolation.
LineIntegral vertical_line(const std::function<cplx(cplx)>& F, double sigma,
                           double t0_max, double panel_h, int order = 24,
                           double tail_frac = 1e-13, int max_doublings = 8);

// (1/2*pi*i) * contour integral around |s - center| = radius, trapezoidal
// rule (geometric convergence for integrands analytic in an annulus).
cplx circle_integral(const std::function<cplx(cplx)>& F, cplx center, double radius,
                     int points = 128);

} // namespace gl4
