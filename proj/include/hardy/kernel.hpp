#pragma once

#include <span>

namespace hardy {

/// Half-width of the analyticity strip {z : |Im z| < d}.
struct StripParam {
    double d;
    explicit StripParam(double half_width);
};

/// A real value v represented as (log|v|, sign v); sign 0 means v == 0
/// and log_abs == -infinity. Keeps products over ~100 factors from
/// under/overflowing.
struct SignedLog {
    double log_abs;
    int sign; // -1, 0, +1

    static SignedLog from_value(double v);
    [[nodiscard]] double value() const; // may over/underflow, for small cases only
};

SignedLog operator*(SignedLog a, SignedLog b);

/// tanh(pi x / (4d)): conformal map of the strip onto the unit disk,
/// restricted to the real axis. Odd, strictly increasing, |result| < 1
/// up to saturation.
double t_map(StripParam p, double x);

/// (1/2) sinh(pi x / (2d)). Overflows to +-inf for very large |x|;
/// callers needing wide ranges evaluate in log space instead.
double s_map(StripParam p, double x);

/// Green kernel K(x) = -log|tanh(pi x/(4d))|. Positive and even for
/// x != 0, +infinity at x == 0, never NaN.
double green_kernel(StripParam p, double x);

/// K'(x) = -(pi/(2d)) / sinh(pi x/(2d)). Throws UsageError at x == 0.
double green_kernel_d1(StripParam p, double x);

/// K''(x) = (pi/(2d))^2 cosh(u)/sinh(u)^2 with u = pi x/(2d); positive
/// for all x != 0. Throws UsageError at x == 0.
double green_kernel_d2(StripParam p, double x);

/// Product of shifted tanh factors prod_j tanh(pi (x - a_j)/(4d)) in
/// (log-magnitude, sign) form. log_abs == -sum_j K(x - a_j); returns
/// (-inf, 0) when x coincides with a point. Never overflows.
SignedLog log_blaschke(StripParam p, std::span<const double> points, double x);

} // namespace hardy
