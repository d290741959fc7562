#include "gl4/bump.hpp"

#include "gl4/quad.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gl4 {

double bump(double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

namespace {

// b^{(j)} = p_j(t)/(1-t^2)^{2j} * b(t); p_{j+1} = p_j'(1-t^2)^2 + (4 j t (1-t^2) - 2t) p_j
const std::vector<std::vector<double>>& bump_deriv_polys(int j_max) {
    static std::vector<std::vector<double>> polys = {{1.0}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(polys.size()) <= j_max) {
        int j = static_cast<int>(polys.size()) - 1;
        const auto& p = polys.back();
        int deg = static_cast<int>(p.size()) - 1;
        std::vector<double> q(deg + 4, 0.0);
        // p'(t) * (1 - t^2)^2 = p'(t) * (1 - 2 t^2 + t^4)
        for (int k = 1; k <= deg; ++k) {
            double c = p[k] * k;
            q[k - 1] += c;
            q[k + 1] -= 2.0 * c;
            q[k + 3] += c;
        }
        // (4 j t (1 - t^2) - 2 t) p = ((4j - 2) t - 4 j t^3) p
        for (int k = 0; k <= deg; ++k) {
            q[k + 1] += (4.0 * j - 2.0) * p[k];
            q[k + 3] -= 4.0 * j * p[k];
        }
        polys.push_back(std::move(q));
    }
    return polys;
}

double poly_eval(const std::vector<double>& p, double t) {
    double acc = 0.0;
    for (size_t k = p.size(); k-- > 0;) acc = acc * t + p[k];
    return acc;
}

} // namespace

double bump_deriv(double t, int j) {
    if (j == 0) return bump(t);
    if (std::abs(t) >= 1.0) return 0.0;
    const auto& polys = bump_deriv_polys(j);
    double u = 1.0 - t * t;
    // (1-t^2)^{-2j} * b stays bounded; combine in log space near the edge
    double logw = -1.0 / u - 2.0 * j * std::log(u);
    if (logw < -700.0) return 0.0;
    return poly_eval(polys[j], t) * std::exp(logw);
}

namespace {

// cumulative integral table of the bump on [-1, 1]
struct BumpCdf {
    static constexpr int kPanels = 1024;
    double h;
    std::vector<double> cum; // cum[i] = Int_{-1}^{-1+i h} b
    BumpCdf() : h(2.0 / kPanels), cum(kPanels + 1, 0.0) {
        for (int i = 0; i < kPanels; ++i) {
            double a = -1.0 + i * h;
            cum[i + 1] =
                cum[i] +
                gl_panel([](double u) { return cplx(bump(u), 0.0); }, a, a + h, 16).real();
        }
    }
    double eval(double z) const { // Int_{-1}^{z} b, z in [-1, 1]
        double pos = (z + 1.0) / h;
        int i = std::min(kPanels - 1, std::max(0, static_cast<int>(pos)));
        double a = -1.0 + i * h;
        return cum[i] +
               gl_panel([](double u) { return cplx(bump(u), 0.0); }, a, z, 16).real();
    }
};

const BumpCdf& bump_cdf() {
    static const BumpCdf table;
    return table;
}

} // namespace

double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const auto& cdf = bump_cdf();
    double total = cdf.cum.back();
    return cdf.eval(2.0 * t - 1.0) / total;
}

TestFunction::TestFunction(double scale_n, double c1, double c2) : n_(scale_n), c1_(c1), c2_(c2) {
    if (!(scale_n > 0.0) || !(c1 > 0.0) || !(c2 > c1))
        throw std::invalid_argument("TestFunction: need 0 < c1 < c2 and N > 0");
}

double TestFunction::operator()(double y) const {
    double t = (2.0 * y / n_ - (c1_ + c2_)) / (c2_ - c1_);
    return bump(t);
}

double TestFunction::deriv(double y, int j) const {
    double t = (2.0 * y / n_ - (c1_ + c2_)) / (c2_ - c1_);
    double dt_dy = 2.0 / (n_ * (c2_ - c1_));
    return bump_deriv(t, j) * std::pow(dt_dy, j);
}

cplx TestFunction::mellin(cplx s, double rel_tol) const {
    double a = support_lo(), b = support_hi();
    return integrate([&](double y) { return (*this)(y) * std::exp((s - 1.0) * std::log(y)); }, a,
                     b, rel_tol, 32);
}

cplx TestFunction::fourier(double xi, double rel_tol) const {
    double a = support_lo(), b = support_hi();
    const double tau = 2.0 * std::numbers::pi;
    // oscillation-aware panel count via `integrate`'s adaptivity
    return integrate(
        [&](double y) {
            return (*this)(y) * std::exp(cplx(0.0, -tau * xi * y));
        },
        a, b, rel_tol, 32);
}

double w3_weight(const TestFunction& w2, double x) {
    if (x <= 0.0) return 0.0;
    return w2(x) / std::sqrt(x);
}

double dyadic_window(double u) { return smooth_step(2.0 * u - 1.0) - smooth_step(u - 1.0); }

double dyadic_partition_residual(const std::vector<double>& t_grid) {
    double worst = 0.0;
    for (double t : t_grid) {
        if (t < 1.0) continue;
        // windows j with t/2^j in (1/2, 2)
        int j_hi = static_cast<int>(std::ceil(std::log2(2.0 * t))) + 1;
        double s = 0.0;
        for (int j = -2; j <= j_hi; ++j) s += dyadic_window(t * std::exp2(-static_cast<double>(j)));
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

} // namespace gl4
