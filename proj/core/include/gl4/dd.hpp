#pragma once

#include <cmath>

namespace gl4 {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where a series suffers catastrophic cancellation, e.g. the Bessel
// power series at moderate argument.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    static dd two_sum(double a, double b) {
        double s = a + b;
        double bb = s - a;
        double err = (a - (s - bb)) + (b - bb);
        return {s, err};
    }

    static dd two_prod(double a, double b) {
        double p = a * b;
        double err = std::fma(a, b, -p);
        return {p, err};
    }

    friend dd operator+(dd a, dd b) {
        dd s = two_sum(a.hi, b.hi);
        s.lo += a.lo + b.lo;
        double t = s.hi + s.lo;
        return {t, s.lo - (t - s.hi)};
    }

    friend dd operator-(dd a, dd b) { return a + dd(-b.hi, -b.lo); }

    friend dd operator*(dd a, dd b) {
        dd p = two_prod(a.hi, b.hi);
        p.lo += a.hi * b.lo + a.lo * b.hi;
        double t = p.hi + p.lo;
        return {t, p.lo - (t - p.hi)};
    }

    friend dd operator/(dd a, dd b) {
        double q1 = a.hi / b.hi;
        dd r = a - b * dd(q1);
        double q2 = r.hi / b.hi;
        dd q = two_sum(q1, q2);
        return q;
    }

    double value() const { return hi + lo; }
};

} // namespace gl4
