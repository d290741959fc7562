#include "gl4/psi.hpp"

#include "gl4/cgamma.hpp"
#include "gl4/errors.hpp"
#include "gl4/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gl4 {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// Extends `cache` with psi~(abscissa + i t_j), t_j = j*step, j in [n_old, n_new).
// One pass over a fixed y-quadrature grid with incremental rotation in t.
// psi is real, so the lower half line follows by conjugation.
void mellin_extend(const TestFunction& psi, double abscissa, double step, size_t n_new,
                   std::vector<cplx>& cache) {
    size_t n_old = cache.size();
    if (n_new <= n_old) return;
    cache.resize(n_new, 0.0);
    double lo = psi.support_lo(), hi = psi.support_hi();
    double t_top = step * static_cast<double>(n_new);
    int panels = std::max<int>(32, static_cast<int>(t_top * std::log(hi / lo) / 8.0));
    const auto& gl = GaussLegendre::get(24);
    double ph = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        double left = lo + p * ph;
        for (size_t q = 0; q < gl.node.size(); ++q) {
            double y = left + 0.5 * ph * (1.0 + gl.node[q]);
            double w = 0.5 * ph * gl.weight[q] * psi(y);
            if (w == 0.0) continue;
            double ly = std::log(y);
            cplx base = w * std::exp((abscissa - 1.0) * ly);
            cplx rot = std::exp(cplx(0.0, step * ly));
            cplx cur = base * std::exp(cplx(0.0, step * static_cast<double>(n_old) * ly));
            for (size_t j = n_old; j < n_new; ++j) {
                cache[j] += cur;
                if (((j - n_old) & 1023) == 1023)
                    cur = base * std::exp(cplx(0.0, step * static_cast<double>(j + 1) * ly));
                else
                    cur *= rot;
            }
        }
    }
}

} // namespace

PsiValue psi_pm(double x, const GammaData& g, const TestFunction& psi, ContourSpec c, int sign) {
    if (!(x > 0.0)) throw std::invalid_argument("psi_pm: x must be positive");
    double lx = std::log(x);
    double step = c.panel_h > 0.0 ? c.panel_h : std::min(0.05, kTau / (std::abs(lx) + 60.0));
    std::vector<cplx> mell;
    cplx acc = 0.0;
    double peak = 0.0;
    size_t n = 0;
    size_t chunk = static_cast<size_t>(std::max(1.0, c.t_max / step));
    double tail_peak = 0.0;
    while (true) {
        size_t n_new = n + chunk;
        if (n_new * step > 64000.0)
            throw truncation_error("psi_pm: line tail did not close", tail_peak);
        mellin_extend(psi, c.abscissa, step, n_new, mell);
        tail_peak = 0.0;
        for (size_t j = n; j < n_new; ++j) {
            double t = step * static_cast<double>(j);
            cplx s(c.abscissa, t);
            cplx up = mell[j] * std::exp(log_G_pm(s, g, sign) + s * lx);
            cplx dn = std::conj(mell[j]) * std::exp(log_G_pm(std::conj(s), g, sign) +
                                                    std::conj(s) * lx);
            cplx term = (j == 0) ? 0.5 * (up + dn) : up + dn;
            acc += term;
            double m = std::abs(up) + std::abs(dn);
            peak = std::max(peak, m);
            tail_peak = std::max(tail_peak, m);
        }
        n = n_new;
        if (tail_peak < c.tail_frac * peak) break;
        chunk = std::max<size_t>(chunk, 2048);
    }
    PsiValue out;
    c.panel_h = step;
    c.t_max = step * static_cast<double>(n);
    out.contour = c;
    out.value = acc * step / kTau;
    out.tail_bound = tail_peak * step * static_cast<double>(n) / kTau;
    return out;
}

PsiValue psi_full(double x_signed, const GammaData& g, const TestFunction& psi, ContourSpec c) {
    if (x_signed == 0.0) throw std::invalid_argument("psi_full: x must be nonzero");
    double x = std::abs(x_signed);
    PsiValue p = psi_pm(x, g, psi, c, +1);
    PsiValue m = psi_pm(x, g, psi, c, -1);
    PsiValue out;
    out.contour = p.contour;
    out.tail_bound = p.tail_bound + m.tail_bound;
    out.value = (x_signed > 0.0) ? p.value + m.value : p.value - m.value;
    return out;
}

cplx PhaseWeightedWindow::operator()(double y) const {
    double w = w3_weight(base, y / scale_n);
    if (w == 0.0) return 0.0;
    return w * std::exp(cplx(0.0, kTau * u * y / (r * t_scale)));
}

cplx PhaseWeightedWindow::mellin(cplx s, double rel_tol) const {
    double a = support_lo(), b = support_hi();
    return integrate([&](double y) { return (*this)(y) * std::exp((s - 1.0) * std::log(y)); }, a,
                     b, rel_tol, 32);
}

ShiftedValue F_plus_shifted(double x, const ArchParams& a, const PhaseWeightedWindow& f,
                            double sigma1, double t_max) {
    if (!(x > 0.0)) throw std::invalid_argument("F_plus_shifted: x must be positive");
    double lx = std::log(x);
    auto gamma_ratio_log = [&](cplx s) {
        cplx acc = 0.0;
        for (int j = 0; j < 4; ++j) {
            cplx zn = s - a.alpha[j] / 2.0;
            cplx zd = 0.5 - s + a.alpha[j] / 2.0;
            if (gamma_pole_distance(zn) < 1e-9 || gamma_pole_distance(zd) < 1e-9)
                throw pole_error("F_plus_shifted: contour through a pole");
            acc += log_gamma(zn) - log_gamma(zd);
        }
        return acc;
    };
    auto integrand = [&](cplx s) {
        return std::exp(-8.0 * s * kLogPi - 2.0 * s * lx + gamma_ratio_log(s)) *
               f.mellin(-2.0 * s + 1.0, 1e-12);
    };
    ShiftedValue out;
    double h = std::min(0.25, 24.0 / (2.0 * std::abs(lx) + 8.0 * std::log(2.0 + 4.0 * t_max) + 4.0));
    auto li = vertical_line(integrand, sigma1, t_max, h, 24);
    cplx prefactor = 2.0 * x * kPi * kPi;
    out.contour_part = prefactor * li.value;

    // poles of Gamma(s - alpha_j/2) at s = alpha_j/2 - n with Re s in (sigma1, 1/4]
    std::vector<cplx> poles;
    for (int j = 0; j < 4; ++j) {
        for (int n = 0;; ++n) {
            double re = a.alpha[j] / 2.0 - n;
            if (re <= sigma1) break;
            if (re <= 0.25 + 1e-12) poles.emplace_back(re, 0.0);
        }
    }
    std::sort(poles.begin(), poles.end(), [](cplx l, cplx r) { return l.real() < r.real(); });
    std::vector<cplx> centers;
    for (cplx p : poles) {
        if (!centers.empty() && std::abs(p - centers.back()) < 1e-9) continue;
        centers.push_back(p);
    }
    for (size_t i = 0; i < centers.size(); ++i) {
        double radius = 0.04;
        radius = std::min(radius, 0.45 * std::abs(centers[i].real() - sigma1));
        for (size_t j = 0; j < centers.size(); ++j)
            if (j != i) radius = std::min(radius, 0.45 * std::abs(centers[i] - centers[j]));
        if (radius < 1e-7) throw pole_error("F_plus_shifted: pole too close to the contour");
        cplx res = prefactor * circle_integral(integrand, centers[i], radius, 160);
        out.residues.emplace_back(centers[i], res);
    }
    return out;
}

AsymPipeline make_asym_pipeline(const ArchParams& a, int order) {
    AsymPipeline p;
    p.alpha = a.alpha;
    p.expansion = fit_stirling_expansion(a.alpha, order);
    return p;
}

namespace {

// Int psi(y) (x y)^{-pow} J_k(8 pi (x y)^{1/4}) dy, adaptive.
cplx bessel_moment(double x, const TestFunction& psi, double pow_, int k) {
    double lo = psi.support_lo(), hi = psi.support_hi();
    return integrate(
        [&](double y) {
            double xy = x * y;
            return cplx(psi(y) * std::pow(xy, -pow_) * bessel_J(k, 8.0 * kPi * std::pow(xy, 0.25)),
                        0.0);
        },
        lo, hi, 1e-12, 32, 22);
}

} // namespace

AsymValue psi_asymptotic(double x, const TestFunction& psi, int K, const AsymPipeline& pipe) {
    double xn = x * psi.scale();
    if (!(xn >= 10.0)) throw regime_error("psi_asymptotic: requires x N >= 10");
    if (K < 1 || K > 3) throw std::invalid_argument("psi_asymptotic: K in {1,2,3}");
    if (pipe.expansion.order < 2) throw std::invalid_argument("psi_asymptotic: need b1, b2");
    AsymValue out;
    cplx b1 = pipe.expansion.b[0];
    cplx b2 = pipe.expansion.b[1];
    // block 1: I_1 via J_2
    out.blocks.push_back(2.0 * kPi * x * bessel_moment(x, psi, 0.25, 2));
    if (K >= 2) {
        // block 2: b1 * I_{2,1}^1 via J_1
        out.blocks.push_back(b1 * 2.0 * x * bessel_moment(x, psi, 0.5, 1));
    }
    if (K >= 3) {
        // block 3: (b1 - 8 b2) * I_{2,1}^3 via J_0
        out.blocks.push_back((b1 - 8.0 * b2) * (-x / (4.0 * kPi)) *
                             bessel_moment(x, psi, 0.75, 0));
    }
    for (cplx b : out.blocks) out.value += b;
    out.envelope = std::pow(xn, (3.0 - K) / 4.0 - 0.125);
    return out;
}

// ------------------------------------------------------------------- PsiGrid

PsiGrid::PsiGrid(const GammaData& g, const TestFunction& psi, double abscissa, double step,
                 double t_cut)
    : abscissa_(abscissa) {
    for (cplx l : g.lambda)
        if (std::abs(l.imag()) > 1e-14)
            throw std::invalid_argument("PsiGrid: requires real lambda");
    step_ = (step > 0.0) ? step : 0.05;
    double t_lim = (t_cut > 0.0) ? t_cut : 64000.0;

    std::vector<cplx> mell;
    size_t n = 0;
    double peak = 0.0;
    while (true) {
        size_t n_new = std::min<size_t>(static_cast<size_t>(t_lim / step_) + 1, n + 4096);
        if (n_new <= n)
            throw truncation_error("PsiGrid: line integrand tail did not close", peak);
        mellin_extend(psi, abscissa_, step_, n_new, mell);
        ts_.resize(n_new);
        integrand_pos_.resize(n_new);
        integrand_neg_.resize(n_new);
        double tail_peak = 0.0;
        for (size_t j = n; j < n_new; ++j) {
            ts_[j] = step_ * static_cast<double>(j);
            cplx s(abscissa_, ts_[j]);
            integrand_pos_[j] = mell[j] * std::exp(log_G_pm(s, g, +1));
            integrand_neg_[j] = mell[j] * std::exp(log_G_pm(s, g, -1));
            double m = std::abs(integrand_pos_[j]) + std::abs(integrand_neg_[j]);
            peak = std::max(peak, m);
            tail_peak = std::max(tail_peak, m);
        }
        n = n_new;
        if (tail_peak < 1e-17 * peak) break;
    }
}

cplx PsiGrid::eval(int sign, double x) const {
    if (!(x > 0.0)) throw std::invalid_argument("PsiGrid::eval: x must be positive");
    const auto& c = (sign > 0) ? integrand_pos_ : integrand_neg_;
    double lx = std::log(x);
    cplx rot = std::exp(cplx(0.0, step_ * lx));
    cplx cur = 1.0;
    cplx acc = 0.5 * c[0];
    for (size_t j = 1; j < c.size(); ++j) {
        if ((j & 1023) == 0)
            cur = std::exp(cplx(0.0, ts_[j] * lx));
        else
            cur *= rot;
        acc += c[j] * cur;
    }
    // conj-symmetric line: the full integral is 2 Re of the upper half
    double re = 2.0 * acc.real();
    return cplx(std::pow(x, abscissa_) * step_ / kTau * re, 0.0);
}

cplx PsiGrid::eval_signed(double x_signed) const {
    double x = std::abs(x_signed);
    cplx p = eval(+1, x), m = eval(-1, x);
    return (x_signed > 0.0) ? p + m : p - m;
}

} // namespace gl4
