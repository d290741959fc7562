#pragma once

#include "gl4/arch.hpp"
#include "gl4/bump.hpp"
#include "gl4/cgamma.hpp"

#include <array>
#include <complex>
#include <vector>

namespace gl4 {

// Gamma_R(s) = pi^{-s/2} Gamma(s/2)
cplx gamma_R(cplx s);

// The normalized ratio G_delta(s): Gamma_R(s)/Gamma_R(1-s) for even delta,
// i * Gamma_R(s+1)/Gamma_R(2-s) for odd delta.
cplx gG_delta(cplx s, int delta);

// Representation parameters feeding the Voronoi Gamma factors.
struct GammaData {
    std::array<cplx, 4> lambda{};
    std::array<int, 4> delta{};

    static GammaData from_arch(const ArchParams& a) {
        GammaData g;
        for (int i = 0; i < 4; ++i) g.lambda[i] = a.alpha[i];
        g.delta = {0, 0, 0, 0};
        return g;
    }
    static GammaData from_shifts(const std::array<double, 4>& sh) {
        GammaData g;
        for (int i = 0; i < 4; ++i) g.lambda[i] = sh[i];
        g.delta = {0, 0, 0, 0};
        return g;
    }
};

// G_+(s) = prod_j G_{delta_j}(s + lambda_j)^{-1};
// G_-(s) = prod_j G_{1+delta_j}(s + lambda_j)^{-1}.
cplx G_pm(cplx s, const GammaData& g, int sign);

// log of G_pm, safe for large |Im s| (no overflow).
cplx log_G_pm(cplx s, const GammaData& g, int sign);

// gamma(s) of the completed Rankin-Selberg L-function at spectral parameter
// t_spec: pi^{-4s} prod_i Gamma((s - i t - alpha_i)/2) Gamma((s + i t - alpha_i)/2).
cplx gamma_factor(cplx s, double t_spec, const ArchParams& a);
cplx log_gamma_factor(cplx s, double t_spec, const ArchParams& a);

// Approximate-functional-equation weight
//   V(y, s) = (1/2 pi i) Int_{(abscissa)} y^{-z} gamma(s+z)/gamma(s) H(z)/z dz
// with H(z) = exp(z^2). Returns the value; throws truncation_error when the
// line integral cannot close its tail.
cplx afe_weight(double y, cplx s, double t_spec, const ArchParams& a, double abscissa = 3.0);

// Bessel J_k(x), series branch below the crossover, Hankel asymptotics above.
double bessel_J(int k, double x);
double bessel_Y(int k, double x); // same branch structure; used by W_k
constexpr double kBesselCrossover = 30.0;

namespace detail {
// branch internals, exposed for handover tests
double bessel_J_series(int k, double x);
double bessel_J_asym(int k, double x);
double bessel_Y_asym(int k, double x);
} // namespace detail

// Slowly varying amplitude of the J-Bessel oscillatory decomposition:
//   J_k(2 pi x) = (1/(2 pi sqrt x)) [ W_k(2 pi x) e(x - k/4 - 1/8) + conj ],
// i.e. W_k(z) = pi sqrt(z / 2 pi) H^(1)_k(z) e(-z/(2 pi) + k/4 + 1/8).
// Argument z >= 1 (asymptotic regime); throws std::domain_error below.
cplx W_amplitude(int k, double z);

// Stirling mismatch of the Gamma-ratio duplication:
//   H(s) = 4^{8s-2} prod_j Gamma(s - alpha_j/2) Gamma(1/2 - 4s)
//          / ( prod_j Gamma(1/2 - s + alpha_j/2) Gamma(4s - 3/2) ) - 1.
cplx stirling_H(cplx s, const std::array<double, 4>& alpha);

struct StirlingExpansion {
    std::vector<cplx> b; // b[j-1] multiplies s^{-j}
    int order = 0;

    cplx eval(cplx s) const {
        cplx acc = 0.0, p = 1.0;
        for (int j = 0; j < order; ++j) {
            p /= s;
            acc += b[j] * p;
        }
        return acc;
    }
};

// Least-squares fit of H(s) = sum b_j s^{-j} on the vertical line Re s =
// sigma, |Im s| in [t_lo, t_hi]. The fit is the Appendix-style expansion;
// validation against held-out points is up to the caller.
StirlingExpansion fit_stirling_expansion(const std::array<double, 4>& alpha, int order,
                                         double sigma = 0.45, double t_lo = 6.0,
                                         double t_hi = 40.0, int samples = 160);

} // namespace gl4
