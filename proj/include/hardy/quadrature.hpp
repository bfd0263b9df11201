#pragma once

#include <functional>
#include <vector>

namespace hardy {

/// Gauss-Legendre rule on [-1, 1]; nodes ascending, weights positive.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule of the given order (number of nodes), computed by Newton
/// iteration on the Legendre polynomial. order >= 1.
const GaussRule& gauss_legendre(int order);

/// integral of f over [a, b] with a single panel of the given order.
double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order);

/// Composite rule: [a, b] split into panel_count equal panels.
double gauss_integrate_composite(const std::function<double(double)>& f, double a, double b,
                                 int order, int panel_count);

} // namespace hardy
