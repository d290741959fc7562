#pragma once

#include <array>

namespace gl4 {

// Archimedean data of a GL(4) form of type (nu1, nu2, nu3).
// alpha[] are the four spectral parameters; they always sum to zero.
struct ArchParams {
    std::array<double, 3> nu{};
    std::array<double, 4> alpha{};

    ArchParams dual() const;
};

// Builds ArchParams from (nu1, nu2, nu3). With cuspidal_range set, enforces
// |alpha_j| < 1/2 (the Luo-Rudnick-Sarnak range) and throws
// std::invalid_argument otherwise.
ArchParams arch_params(double nu1, double nu2, double nu3, bool cuspidal_range = false);

} // namespace gl4
