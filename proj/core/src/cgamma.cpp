#include "gl4/cgamma.hpp"

#include <cmath>
#include <limits>

namespace gl4 {

namespace {

// Lanczos coefficients, g = 607/128, n = 15 (Godfrey's set). Good for
// ~1e-13 relative accuracy in double over the right half plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

cplx log_gamma_right(cplx z) {
    // valid for Re z >= 0.5
    cplx sum = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (z + cplx(k - 1, 0.0));
    cplx base = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(base) - base + kLogSqrt2Pi + std::log(sum);
}

} // namespace

cplx log_sin_pi(cplx z) {
    const double pi = 3.14159265358979323846264338327950288;
    double y = z.imag();
    if (std::abs(y) < 12.0) return std::log(std::sin(pi * cplx(z)));
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / (2i); keep the dominant factor.
    if (y > 0.0) {
        // e^{-i pi z} dominates, modulus e^{pi y}
        cplx small = std::exp(cplx(0, 2.0 * pi) * z); // |.| = e^{-2 pi y}
        return cplx(0, -pi) * z + std::log(1.0 - small) + std::log(cplx(0.0, 0.5));
    }
    cplx small = std::exp(cplx(0, -2.0 * pi) * z);
    return cplx(0, pi) * z + std::log(1.0 - small) + std::log(cplx(0.0, -0.5));
}

cplx log_gamma(cplx z) {
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1 - z)
    const double log_pi = 1.1447298858494001741434273513531;
    return log_pi - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

double gamma_pole_distance(cplx z) {
    if (z.real() > 0.5) return std::numeric_limits<double>::infinity();
    double n = std::round(z.real());
    if (n > 0.0) n = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (double m : {n - 1.0, n, n + 1.0}) {
        if (m > 0.0) continue;
        best = std::min(best, std::abs(z - cplx(m, 0.0)));
    }
    return best;
}

} // namespace gl4
