#include "gl4/special.hpp"

#include "gl4/dd.hpp"
#include "gl4/errors.hpp"
#include "gl4/quad.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gl4 {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741434273513531;
} // namespace

cplx gamma_R(cplx s) {
    if (gamma_pole_distance(s / 2.0) < 1e-8)
        throw pole_error("gamma_R: argument too close to a pole");
    return std::exp(-s / 2.0 * kLogPi + log_gamma(s / 2.0));
}

namespace {

cplx log_gG_delta(cplx s, int delta) {
    if ((delta & 1) == 0) {
        // Gamma_R(s) / Gamma_R(1-s)
        if (gamma_pole_distance(s / 2.0) < 1e-8)
            throw pole_error("gG_delta: pole of numerator");
        return (0.5 - s) * kLogPi + log_gamma(s / 2.0) - log_gamma((1.0 - s) / 2.0);
    }
    // i Gamma_R(s+1) / Gamma_R(2-s)
    if (gamma_pole_distance((s + 1.0) / 2.0) < 1e-8)
        throw pole_error("gG_delta: pole of numerator");
    return cplx(0.0, kPi / 2.0) + (0.5 - s) * kLogPi + log_gamma((s + 1.0) / 2.0) -
           log_gamma(1.0 - s / 2.0);
}

} // namespace

cplx gG_delta(cplx s, int delta) { return std::exp(log_gG_delta(s, delta)); }

cplx log_G_pm(cplx s, const GammaData& g, int sign) {
    cplx acc = 0.0;
    for (int j = 0; j < 4; ++j) {
        int delta = g.delta[j] + (sign > 0 ? 0 : 1);
        // zeros of gG (poles of the reciprocal) come from Gamma poles of the
        // denominator of gG; guard both directions.
        cplx arg = s + g.lambda[j];
        if ((delta & 1) == 0) {
            if (gamma_pole_distance((1.0 - arg) / 2.0) < 1e-8)
                throw pole_error("G_pm: pole (even factor)");
        } else {
            if (gamma_pole_distance(1.0 - arg / 2.0) < 1e-8)
                throw pole_error("G_pm: pole (odd factor)");
        }
        acc -= log_gG_delta(arg, delta);
    }
    return acc;
}

cplx G_pm(cplx s, const GammaData& g, int sign) { return std::exp(log_G_pm(s, g, sign)); }

cplx log_gamma_factor(cplx s, double t_spec, const ArchParams& a) {
    cplx acc = -4.0 * s * kLogPi;
    for (int i = 0; i < 4; ++i) {
        cplx z1 = (s - cplx(0.0, t_spec) - a.alpha[i]) / 2.0;
        cplx z2 = (s + cplx(0.0, t_spec) - a.alpha[i]) / 2.0;
        if (gamma_pole_distance(z1) < 1e-8 || gamma_pole_distance(z2) < 1e-8)
            throw pole_error("gamma_factor: pole");
        acc += log_gamma(z1) + log_gamma(z2);
    }
    return acc;
}

cplx gamma_factor(cplx s, double t_spec, const ArchParams& a) {
    return std::exp(log_gamma_factor(s, t_spec, a));
}

cplx afe_weight(double y, cplx s, double t_spec, const ArchParams& a, double abscissa) {
    if (!(y > 0.0)) throw std::invalid_argument("afe_weight: y must be positive");
    cplx log_gamma_s = log_gamma_factor(s, t_spec, a);
    double logy = std::log(y);
    auto F = [&](cplx z) {
        cplx lg = log_gamma_factor(s + z, t_spec, a) - log_gamma_s;
        return std::exp(-z * logy + lg + z * z) / z;
    };
    auto li = vertical_line(F, abscissa, 16.0, 0.5, 24);
    return li.value;
}

// ---------------------------------------------------------------------- Bessel

namespace {

// power series J_k(x) = sum_l (-1)^l (x/2)^{2l+k} / (l! (l+k)!), double-double
double bessel_J_series(int k, double x) {
    dd half(x * 0.5);
    dd t(1.0);
    for (int i = 0; i < k; ++i) t = t * half;
    for (int i = 2; i <= k; ++i) t = t / dd(static_cast<double>(i));
    dd q = half * half;
    dd sum = t;
    double peak = std::abs(t.value());
    for (int l = 1; l < 400; ++l) {
        t = t * q / dd(static_cast<double>(l) * (l + k));
        if (l & 1)
            sum = sum - t;
        else
            sum = sum + t;
        double at = std::abs(t.value());
        peak = std::max(peak, at);
        if (at < 1e-32 * peak && l > x * 0.5) break;
    }
    return sum.value();
}

// asymptotic amplitude pieces: P + iQ with
//   P = sum (-1)^m a_{2m}/x^{2m},  Q = sum (-1)^m a_{2m+1}/x^{2m+1},
//   a_j = prod_{i<=j} (mu - (2i-1)^2) / (j! 8^j), mu = 4k^2.
void bessel_PQ(int k, double x, double& P, double& Q) {
    double mu = 4.0 * static_cast<double>(k) * k;
    P = 1.0;
    Q = 0.0;
    double term = 1.0;
    double prev = 1e308;
    for (int j = 1; j < 200; ++j) {
        term *= (mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j * x);
        double at = std::abs(term);
        if (at >= prev || at < 1e-18) {
            if (at < prev) {
                // include the final small term
                double sgn = ((j / 2) & 1) ? -1.0 : 1.0;
                if (j & 1)
                    Q += sgn * term;
                else
                    P += sgn * term;
            }
            break;
        }
        prev = at;
        double sgn = ((j / 2) & 1) ? -1.0 : 1.0;
        if (j & 1)
            Q += sgn * term;
        else
            P += sgn * term;
    }
}

// phase w = x - (2k+1) pi/4 with a compensated subtraction; at large x the
// naive difference loses ~ulp(x) of phase.
void bessel_phase(int k, double x, double& cw, double& sw) {
    const double shift_hi = (2.0 * k + 1.0) * 0.78539816339744830962; // (2k+1) pi/4, leading
    const double shift_lo = (2.0 * k + 1.0) * 3.061616997868383018e-17;
    dd w = dd::two_sum(x, -shift_hi) + dd(-shift_lo);
    double c = std::cos(w.hi), s = std::sin(w.hi);
    cw = c - w.lo * s;
    sw = s + w.lo * c;
}

} // namespace

namespace detail {

double bessel_J_series(int k, double x) { return gl4::bessel_J_series(k, x); }

double bessel_J_asym(int k, double x) {
    double P, Q, cw, sw;
    bessel_PQ(k, x, P, Q);
    bessel_phase(k, x, cw, sw);
    return std::sqrt(2.0 / (kPi * x)) * (cw * P - sw * Q);
}

double bessel_Y_asym(int k, double x) {
    double P, Q, cw, sw;
    bessel_PQ(k, x, P, Q);
    bessel_phase(k, x, cw, sw);
    return std::sqrt(2.0 / (kPi * x)) * (sw * P + cw * Q);
}

} // namespace detail

double bessel_J(int k, double x) {
    if (k < 0) throw std::invalid_argument("bessel_J: order must be nonnegative");
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_J: x must be nonnegative");
    if (x > 1e6) throw std::invalid_argument("bessel_J: x above supported range");
    if (x < kBesselCrossover) return bessel_J_series(k, x);
    return detail::bessel_J_asym(k, x);
}

double bessel_Y(int k, double x) {
    if (k < 0 || !(x > 0.0)) throw std::invalid_argument("bessel_Y: bad arguments");
    if (x < kBesselCrossover) return std::cyl_neumann(static_cast<double>(k), x);
    return detail::bessel_Y_asym(k, x);
}

cplx W_amplitude(int k, double z) {
    if (!(z >= 1.0)) throw std::domain_error("W_amplitude: asymptotic regime needs z >= 1");
    double w = z - 0.5 * k * kPi - 0.25 * kPi;
    if (z >= kBesselCrossover) {
        double P, Q;
        bessel_PQ(k, z, P, Q);
        return {P, Q};
    }
    cplx hankel(bessel_J(k, z), bessel_Y(k, z));
    return kPi * std::sqrt(z / (2.0 * kPi)) * hankel * std::exp(cplx(0.0, -w));
}

// ----------------------------------------------------------------- Stirling H

cplx stirling_H(cplx s, const std::array<double, 4>& alpha) {
    cplx acc = (8.0 * s - 2.0) * std::log(4.0);
    for (int j = 0; j < 4; ++j) {
        cplx zn = s - alpha[j] / 2.0;
        cplx zd = 0.5 - s + alpha[j] / 2.0;
        if (gamma_pole_distance(zn) < 1e-8 || gamma_pole_distance(zd) < 1e-8)
            throw pole_error("stirling_H: pole");
        acc += log_gamma(zn) - log_gamma(zd);
    }
    cplx zn = 0.5 - 4.0 * s;
    cplx zd = 4.0 * s - 1.5;
    if (gamma_pole_distance(zn) < 1e-8 || gamma_pole_distance(zd) < 1e-8)
        throw pole_error("stirling_H: pole");
    acc += log_gamma(zn) - log_gamma(zd);
    return std::exp(acc) - 1.0;
}

StirlingExpansion fit_stirling_expansion(const std::array<double, 4>& alpha, int order,
                                         double sigma, double t_lo, double t_hi, int samples) {
    if (order < 1) throw std::invalid_argument("fit_stirling_expansion: order >= 1");
    std::vector<cplx> pts;
    pts.reserve(2 * samples);
    double ratio = std::pow(t_hi / t_lo, 1.0 / (samples - 1));
    for (int i = 0; i < samples; ++i) {
        double t = t_lo * std::pow(ratio, i);
        pts.emplace_back(sigma, t);
        pts.emplace_back(sigma, -t);
    }
    // normal equations: M b = r with M_{jk} = sum_i s_i^{-j} conj(s_i^{-k})
    std::vector<std::vector<cplx>> M(order, std::vector<cplx>(order, 0.0));
    std::vector<cplx> rhs(order, 0.0);
    for (cplx s : pts) {
        cplx h = stirling_H(s, alpha);
        std::vector<cplx> basis(order);
        cplx p = 1.0;
        for (int j = 0; j < order; ++j) {
            p /= s;
            basis[j] = p;
        }
        for (int j = 0; j < order; ++j) {
            rhs[j] += std::conj(basis[j]) * h;
            for (int k = 0; k < order; ++k) M[j][k] += std::conj(basis[j]) * basis[k];
        }
    }
    // Gaussian elimination with partial pivoting
    for (int c = 0; c < order; ++c) {
        int piv = c;
        for (int r = c + 1; r < order; ++r)
            if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
        std::swap(M[c], M[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (int r = c + 1; r < order; ++r) {
            cplx f = M[r][c] / M[c][c];
            for (int k = c; k < order; ++k) M[r][k] -= f * M[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    StirlingExpansion ex;
    ex.order = order;
    ex.b.assign(order, 0.0);
    for (int r = order - 1; r >= 0; --r) {
        cplx acc = rhs[r];
        for (int k = r + 1; k < order; ++k) acc -= M[r][k] * ex.b[k];
        ex.b[r] = acc / M[r][r];
    }
    return ex;
}

} // namespace gl4
