#pragma once

#include <cassert>
#include <cmath>

namespace hardy {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;

/// log(1 - exp(-a)) for a > 0 without cancellation on either end.
inline double log1mexp(double a) {
    assert(a > 0.0);
    return a < kLn2 ? std::log(-std::expm1(-a)) : std::log1p(-std::exp(-a));
}

/// log(1 + exp(t)) without overflow for large t.
inline double log1pexp(double t) {
    return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

/// log(cosh(u)); for large |u| uses |u| + log((1 + e^{-2|u|})/2).
inline double log_cosh(double u) {
    double a = std::abs(u);
    if (a < 0.1) return std::log(std::cosh(a));
    return a + std::log1p(std::exp(-2.0 * a)) - kLn2;
}

/// log|sinh(u)| for u != 0; immune to sinh overflow.
inline double log_sinh_abs(double u) {
    double a = std::abs(u);
    assert(a > 0.0);
    if (a < 1.0) return std::log(std::sinh(a));
    return a + log1mexp(2.0 * a) - kLn2;
}

/// Logistic function 1/(1 + e^{-t}).
inline double logistic(double t) {
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    double e = std::exp(t);
    return e / (1.0 + e);
}

/// sin(pi t)/(pi t) with the removable singularity filled in.
inline double sinc(double t) {
    if (t == 0.0) return 1.0;
    double pt = kPi * t;
    return std::sin(pt) / pt;
}

} // namespace hardy
