#include "hardy/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hardy/errors.hpp"
#include "hardy/stable_math.hpp"

namespace hardy {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

GaussRule compute_rule(int order) {
    GaussRule rule;
    rule.nodes.resize(static_cast<size_t>(order));
    rule.weights.resize(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i) {
        // Chebyshev-based initial guess, then Newton.
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre(order, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, dp] = legendre(order, x);
        (void)p;
        rule.nodes[static_cast<size_t>(order - 1 - i)] = x;
        rule.weights[static_cast<size_t>(order - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int order) {
    if (order < 1) throw UsageError("gauss_legendre: order must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double gauss_integrate(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * s;
}

double gauss_integrate_composite(const std::function<double(double)>& f, double a, double b,
                                 int order, int panel_count) {
    if (panel_count < 1) throw UsageError("gauss_integrate_composite: need >= 1 panel");
    double s = 0.0;
    const double width = (b - a) / panel_count;
    for (int p = 0; p < panel_count; ++p)
        s += gauss_integrate(f, a + p * width, a + (p + 1) * width, order);
    return s;
}

} // namespace hardy
