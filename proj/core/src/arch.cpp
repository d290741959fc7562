#include "gl4/arch.hpp"

#include <cmath>
#include <stdexcept>

namespace gl4 {

ArchParams arch_params(double nu1, double nu2, double nu3, bool cuspidal_range) {
    ArchParams a;
    a.nu = {nu1, nu2, nu3};
    a.alpha[0] = 1.5 - nu1 - 2.0 * nu2 - 3.0 * nu3;
    a.alpha[1] = -1.5 + 3.0 * nu1 + 2.0 * nu2 + nu3;
    a.alpha[2] = -0.5 - nu1 + 2.0 * nu2 + nu3;
    a.alpha[3] = 0.5 - nu1 - 2.0 * nu2 + nu3;
    if (cuspidal_range) {
        for (double al : a.alpha) {
            if (std::abs(al) >= 0.5)
                throw std::invalid_argument("arch_params: |alpha_j| >= 1/2 outside cuspidal range");
        }
    }
    return a;
}

ArchParams ArchParams::dual() const { return arch_params(nu[2], nu[1], nu[0]); }

} // namespace gl4
