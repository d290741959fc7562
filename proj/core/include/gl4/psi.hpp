#pragma once

#include "gl4/arch.hpp"
#include "gl4/bump.hpp"
#include "gl4/special.hpp"

#include <complex>
#include <vector>

namespace gl4 {

// Vertical-line quadrature description for all Mellin-Barnes integrals here.
struct ContourSpec {
    double abscissa = -0.4; // Re s of the line
    double t_max = 40.0;    // initial height; doubled until the tail closes
    double panel_h = 0.0;   // 0 = auto from the local oscillation rate
    int order = 24;
    double tail_frac = 1e-13;
};

struct PsiValue {
    cplx value = 0.0;
    double tail_bound = 0.0;
    ContourSpec contour;
};

// Psi_{+-}(x) = (1/2 pi i) Int_{(abscissa)} psi~(s) x^s G_{+-}(s) ds, x > 0.
PsiValue psi_pm(double x, const GammaData& g, const TestFunction& psi, ContourSpec c,
                int sign);

// Psi at signed argument: Psi(x) = Psi_+ + Psi_- and Psi(-x) = Psi_+ - Psi_-
// for x > 0.
PsiValue psi_full(double x_signed, const GammaData& g, const TestFunction& psi, ContourSpec c);

// The shifted representation of F_+ for window functions f:
//   F_+(x) = (2 x pi^2 / 2 pi i) Int_{(sigma1)} pi^{-8s} x^{-2s}
//            prod_j Gamma(s - alpha_j/2) / Gamma(1/2 - s + alpha_j/2)
//            f~(-2s+1) ds  +  (residues crossed when sigma1 < 1/4).
// Residues are evaluated by small-circle quadrature around each pole of the
// integrand with Re s in (sigma1, 1/4].
struct ShiftedValue {
    cplx contour_part = 0.0;
    std::vector<std::pair<cplx, cplx>> residues; // (pole location, contribution)
    cplx total() const {
        cplx t = contour_part;
        for (auto& r : residues) t += r.second;
        return t;
    }
};

// Smooth window with an extra linear phase: f(y) = w3(y/N) e(u y / (r T)).
struct PhaseWeightedWindow {
    TestFunction base; // the w2 shape at unit scale
    double scale_n = 1.0;
    double u = 0.0;
    double r = 1.0;
    double t_scale = 1.0;

    cplx operator()(double y) const;
    cplx mellin(cplx s, double rel_tol = 1e-12) const;
    double support_lo() const { return base.support_lo() * scale_n; }
    double support_hi() const { return base.support_hi() * scale_n; }
};

ShiftedValue F_plus_shifted(double x, const ArchParams& a, const PhaseWeightedWindow& f,
                            double sigma1, double t_max = 60.0);

// Coefficients of the large-argument expansion of Psi_+ produced by the
// Stirling pipeline. The j-th block is a J-Bessel moment:
//   block 1:  2 pi x Int psi(y) (xy)^{-1/4} J_2(8 pi (xy)^{1/4}) dy
//   block 2:  b1 * 2 x Int psi(y) (xy)^{-1/2} J_1(8 pi (xy)^{1/4}) dy
//   block 3:  (b1 - 8 b2) * (-x/(4 pi)) Int psi(y) (xy)^{-3/4} J_0(...) dy
struct AsymPipeline {
    StirlingExpansion expansion;
    std::array<double, 4> alpha;
};

AsymPipeline make_asym_pipeline(const ArchParams& a, int order = 4);

struct AsymValue {
    cplx value = 0.0;
    double envelope = 0.0; // predicted size of the first dropped block
    std::vector<cplx> blocks;
};

// K-term asymptotic of Psi_+(x) for x N >> 1 (throws regime_error below
// x N = 10). K in {1, 2, 3}.
AsymValue psi_asymptotic(double x, const TestFunction& psi, int K, const AsymPipeline& pipe);

// Precomputed vertical-line integrand for evaluating Psi at many arguments
// sharing one (GammaData, TestFunction) pair. Uniform-step trapezoid line;
// requires real lambda so the t < 0 half follows by conjugation.
class PsiGrid {
  public:
    PsiGrid(const GammaData& g, const TestFunction& psi, double abscissa = -0.4,
            double step = 0.0, double t_cut = 0.0);

    // Psi_{sign}(x) for x > 0 by direct summation over the cached line.
    cplx eval(int sign, double x) const;
    // Psi(x) / Psi(-x) recombination
    cplx eval_signed(double x_signed) const;

    double abscissa() const { return abscissa_; }
    size_t points() const { return ts_.size(); }

  private:
    double abscissa_;
    double step_;
    std::vector<double> ts_;
    std::vector<cplx> integrand_pos_; // psi~(s) G_+(s) at s = abscissa + i t
    std::vector<cplx> integrand_neg_;
};

} // namespace gl4
