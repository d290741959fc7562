#pragma once

#include <complex>
#include <vector>

namespace gl4 {

using cplx = std::complex<double>;

// The canonical C-infinity bump b(t) = exp(-1/(1-t^2)) on (-1,1), 0 outside.
double bump(double t);

// j-th derivative of the bump, by the rational-prefactor recurrence
// b^(j)(t) = p_j(t) / (1-t^2)^(2j) * b(t).
double bump_deriv(double t, int j);

// Smooth step: 0 for t <= 0, 1 for t >= 1, monotone C-infinity in between
// (normalized integral of the bump).
double smooth_step(double t);

// Smooth compactly supported test function on [c1*N, c2*N], built from the
// canonical bump. Supports pointwise evaluation, derivatives, the Mellin
// transform psi~(s) = Int psi(t) t^(s-1) dt, and the Fourier transform
// psi^(xi) = Int psi(t) e(-xi t) dt.
class TestFunction {
  public:
    TestFunction(double scale_n = 1.0, double c1 = 1.0, double c2 = 2.0);

    double scale() const { return n_; }
    double support_lo() const { return c1_ * n_; }
    double support_hi() const { return c2_ * n_; }

    double operator()(double y) const;
    double deriv(double y, int j) const;

    cplx mellin(cplx s, double rel_tol = 1e-12) const;
    cplx fourier(double xi, double rel_tol = 1e-12) const;

    // rescaled copy psi_N(t) = psi(t / m)
    TestFunction rescaled(double m) const { return TestFunction(n_ * m, c1_, c2_); }

  private:
    double n_, c1_, c2_;
};

// w3(x) = w2(x) / sqrt(x) evaluated with w2 a TestFunction at unit scale.
double w3_weight(const TestFunction& w2, double x);

// Dyadic partition window w1 with sum_j w1(t / 2^j) = 1 for t > 0:
// w1(u) = S(2u) - S(u) with S the smooth step on [1, 2].
double dyadic_window(double u);

// max_t | sum_j w1(t/2^j) - 1 | over the given grid of t >= 1 values.
double dyadic_partition_residual(const std::vector<double>& t_grid);

} // namespace gl4
