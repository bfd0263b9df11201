#include "hardy/kernel.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/stable_math.hpp"

namespace hardy {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

StripParam::StripParam(double half_width) : d(half_width) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw UsageError("strip half-width d must be positive and finite");
}

SignedLog SignedLog::from_value(double v) {
    if (v == 0.0) return {-kInf, 0};
    return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return {-kInf, 0};
    return {a.log_abs + b.log_abs, a.sign * b.sign};
}

double t_map(StripParam p, double x) {
    double v = std::tanh(kPi * x / (4.0 * p.d));
    assert(!std::isnan(v));
    return v;
}

double s_map(StripParam p, double x) { return 0.5 * std::sinh(kPi * x / (2.0 * p.d)); }

double green_kernel(StripParam p, double x) {
    if (x == 0.0) return kInf;
    double u = kPi * std::abs(x) / (4.0 * p.d);
    if (u == 0.0) return kInf; // denormal x underflowed the argument
    // -log tanh(u) = log(1 + e^{-2u}) - log(1 - e^{-2u})
    double k = std::log1p(std::exp(-2.0 * u)) - log1mexp(2.0 * u);
    assert(!std::isnan(k));
    return k > 0.0 ? k : 0.0;
}

double green_kernel_d1(StripParam p, double x) {
    if (x == 0.0) throw UsageError("green_kernel_d1: singular at x == 0");
    double c = kPi / (2.0 * p.d);
    double v = -c / std::sinh(c * x);
    assert(!std::isnan(v));
    return v;
}

double green_kernel_d2(StripParam p, double x) {
    if (x == 0.0) throw UsageError("green_kernel_d2: singular at x == 0");
    double c = kPi / (2.0 * p.d);
    double u = c * x;
    // cosh(u)/sinh(u)^2 written as 1/(sinh(u) tanh(u)) so that sinh
    // overflow yields 0 instead of inf/inf.
    double v = c * c / (std::sinh(u) * std::tanh(u));
    assert(!std::isnan(v) && v >= 0.0);
    return v;
}

SignedLog log_blaschke(StripParam p, std::span<const double> points, double x) {
    double log_abs = 0.0;
    int sign = 1;
    for (double a : points) {
        double dx = x - a;
        if (dx == 0.0) return {-kInf, 0};
        log_abs -= green_kernel(p, dx);
        if (dx < 0.0) sign = -sign;
    }
    return {log_abs, sign};
}

} // namespace hardy
