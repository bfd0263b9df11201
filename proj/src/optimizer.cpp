#include "hardy/optimizer.hpp"

#include <cmath>

#include <Eigen/Cholesky>

namespace hardy {

namespace {

// Smallest positive root bracket of Q(x) = tau on the given side
// (side = +1 right, -1 left), resolved by bisection. Q is convex with
// Q(0) below tau for any reasonable weight, so the root on the outer
// branch is unique.
double q_level_crossing(const Weight& wt, double tau, int side, int n) {
    const double limit = 10.0 * n;
    if (!(wt.q(0.0) < tau)) return side * static_cast<double>(n); // no bracket from 0
    double lo = 0.0, hi = 0.0;
    for (double b = 1.0; b <= limit; b *= 2.0) {
        if (wt.q(side * b) >= tau) {
            hi = b;
            break;
        }
        lo = b;
    }
    if (hi == 0.0) return side * static_cast<double>(n); // fallback
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (wt.q(side * mid) >= tau)
            hi = mid;
        else
            lo = mid;
    }
    return side * hi;
}

} // namespace

PointConfig initialize(const Weight& wt, int n) {
    if (n < 2) throw UsageError("initialize: need n >= 2 sampling points");
    const double tau = std::max(2.0, std::log(static_cast<double>(n)));
    const double xr = q_level_crossing(wt, tau, +1, n);
    const double xl = q_level_crossing(wt, tau, -1, n);
    std::vector<double> pts(static_cast<size_t>(n));
    // Convex-combination form keeps mirrored indices exactly opposite
    // when xl == -xr (even weights).
    for (int i = 0; i < n; ++i)
        pts[static_cast<size_t>(i)] = ((n - 1 - i) * xl + i * xr) / (n - 1);
    return PointConfig(std::move(pts));
}

std::pair<Eigen::VectorXd, PointConfig> newton_step(const Weight& wt, const PointConfig& a,
                                                    bool damping, double tol_step) {
    const int n = a.size();
    Eigen::VectorXd g = energy_gradient(wt, a);
    Eigen::MatrixXd h = energy_hessian(wt, a);
    Eigen::LLT<Eigen::MatrixXd> llt(h);
    if (llt.info() != Eigen::Success)
        throw NumericError("newton_step: Hessian factorization failed (conditioning)");
    Eigen::VectorXd delta = llt.solve(-g);
    const double step_inf = delta.lpNorm<Eigen::Infinity>();

    auto candidate = [&](double alpha) {
        std::vector<double> next(a.values());
        for (int i = 0; i < n; ++i) next[static_cast<size_t>(i)] += alpha * delta[i];
        return next;
    };

    if (!damping) {
        std::vector<double> next = candidate(1.0);
        if (!PointConfig::well_separated(next))
            throw NumericError("newton_step: plain step violates point ordering");
        return {delta, PointConfig(std::move(next))};
    }

    // Inside the quadratic basin the energy differences drop below
    // double rounding long before the step reaches tol_step, so the
    // descent test would stall the iteration around 1e-8; small steps
    // are taken undamped (convexity makes them safe).
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i]));
    const bool quadratic_tail = step_inf <= 1e-5 * scale;

    const double e0 = quadratic_tail ? 0.0 : energy_value(wt, a);
    const double alpha_min = std::ldexp(1.0, -40);
    for (double alpha = 1.0; alpha >= alpha_min; alpha *= 0.5) {
        std::vector<double> next = candidate(alpha);
        if (!PointConfig::well_separated(next)) continue;
        PointConfig pc(std::move(next));
        if (quadratic_tail || alpha * step_inf < tol_step)
            return {alpha * delta, std::move(pc)};
        if (energy_value(wt, pc) < e0) return {alpha * delta, std::move(pc)};
    }
    throw NumericError("newton_step: damping stalled (no descent above alpha = 2^-40)");
}

SolveResult solve(const Weight& wt, int n, const SolverConfig& cfg) {
    if (n < 2) throw UsageError("solve: need n >= 2 sampling points");
    if (!(cfg.tol_step > 0.0)) throw UsageError("solve: tol_step must be positive");
    if (cfg.max_iter < 1) throw UsageError("solve: max_iter must be >= 1");

    PointConfig a = cfg.initial_points ? PointConfig(*cfg.initial_points) : initialize(wt, n);
    if (a.size() != n)
        throw UsageError("solve: initial configuration size does not match n");

    std::vector<IterationRecord> trace;
    trace.reserve(32);
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        auto [delta, next] = newton_step(wt, a, cfg.damping, cfg.tol_step);
        a = std::move(next);
        const double step_inf = delta.lpNorm<Eigen::Infinity>();
        trace.push_back({energy_value(wt, a), step_inf});
        if (step_inf < cfg.tol_step) {
            EnergyReport report = f_d_constant(wt, a);
            return {std::move(a), iter, step_inf, report, std::move(trace)};
        }
    }
    throw ConvergenceError("solve: Newton did not converge within max_iter", std::move(trace));
}

} // namespace hardy
