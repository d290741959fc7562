#pragma once

#include <stdexcept>
#include <string>

namespace gl4 {

// Argument outside the supported factorization/index range.
struct capacity_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation point too close to a pole of a Gamma factor.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A quadrature or series truncation failed to certify its target accuracy.
struct truncation_error : std::runtime_error {
    double tail_bound;
    truncation_error(const std::string& what, double tail)
        : std::runtime_error(what), tail_bound(tail) {}
};

// Asymptotic formula requested outside its regime of validity.
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace gl4
