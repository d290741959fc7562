#include "gl4/quad.hpp"

#include "gl4/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace gl4 {

namespace {

GaussLegendre make_gl(int n) {
    GaussLegendre g;
    g.node.resize(n);
    g.weight.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-based initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        g.node[i] = x;
        g.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
}

} // namespace

const GaussLegendre& GaussLegendre::get(int order) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_gl(order)).first;
    return it->second;
}

cplx gl_panel(const std::function<cplx(double)>& f, double a, double b, int order) {
    const auto& g = GaussLegendre::get(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx acc = 0.0;
    for (size_t i = 0; i < g.node.size(); ++i)
        acc += g.weight[i] * f(mid + half * g.node[i]);
    return acc * half;
}

namespace {

struct AdaptState {
    const std::function<cplx(double)>* f;
    double rel_tol;
    int order;
    double mass = 0.0; // running sum of |panel| for the relative scale
};

cplx adapt(AdaptState& st, double a, double b, cplx whole, int depth) {
    double mid = 0.5 * (a + b);
    cplx left = gl_panel(*st.f, a, mid, st.order);
    cplx right = gl_panel(*st.f, mid, b, st.order);
    cplx sum = left + right;
    double scale = std::max(st.mass, std::abs(sum));
    if (std::abs(sum - whole) <= st.rel_tol * std::max(scale, 1e-300)) {
        st.mass += std::abs(sum);
        return sum;
    }
    if (depth <= 0)
        throw truncation_error("integrate: adaptive depth exhausted", std::abs(sum - whole));
    return adapt(st, a, mid, left, depth - 1) + adapt(st, mid, b, right, depth - 1);
}

} // namespace

cplx integrate(const std::function<cplx(double)>& f, double a, double b, double rel_tol,
               int order, int max_depth) {
    if (a == b) return 0.0;
    AdaptState st{&f, rel_tol, order};
    // seed the convergence scale with a coarse-pass mass estimate, so that
    // leaf panels at flat edges of the integrand terminate
    double h = (b - a) / 8.0;
    for (int i = 0; i < 8; ++i) st.mass += std::abs(gl_panel(f, a + i * h, a + (i + 1) * h, order));
    st.mass *= 0.25;
    cplx whole = gl_panel(f, a, b, order);
    return adapt(st, a, b, whole, max_depth);
}

LineIntegral vertical_line(const std::function<cplx(cplx)>& F, double sigma, double t0_max,
                           double panel_h, int order, double tail_frac, int max_doublings) {
    auto slice = [&](double ta, double tb) {
        return gl_panel([&](double t) { return F(cplx(sigma, t)); }, ta, tb, order);
    };
    cplx total = 0.0;
    double mass = 0.0;
    double t = 0.0;
    double t_max = t0_max;
    double last_pair = 0.0;
    for (int d = 0; d <= max_doublings; ++d) {
        while (t < t_max) {
            double tb = std::min(t + panel_h, t_max);
            cplx up = slice(t, tb);
            cplx dn = slice(-tb, -t);
            total += up + dn;
            last_pair = std::abs(up) + std::abs(dn);
            mass += last_pair;
            t = tb;
        }
        if (last_pair <= tail_frac * std::max(mass, 1e-300)) break;
        if (d == max_doublings)
            throw truncation_error("vertical_line: tail did not close", last_pair);
        t_max *= 2.0;
    }
    // ds = i dt, so (1/2 pi i) Int F ds = (1/2 pi) Int F dt.
    // Tail estimate: one more panel pair's worth (the integrands here decay
    // faster than geometrically once the bump's Mellin factor takes over).
    double tail = last_pair;
    return {total / (2.0 * std::numbers::pi), tail / (2.0 * std::numbers::pi)};
}

cplx circle_integral(const std::function<cplx(cplx)>& F, cplx center, double radius, int points) {
    // s = center + radius e^{i theta}; (1/2 pi i) Int F ds
    // = (1/N) Sum F(s_k) radius e^{i theta_k}
    cplx acc = 0.0;
    for (int k = 0; k < points; ++k) {
        double th = 2.0 * std::numbers::pi * (k + 0.5) / points;
        cplx w = std::polar(radius, th);
        acc += F(center + w) * w;
    }
    return acc / static_cast<double>(points);
}

} // namespace gl4
