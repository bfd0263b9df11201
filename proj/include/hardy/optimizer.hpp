#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hardy/energy.hpp"
#include "hardy/errors.hpp"
#include "hardy/point_config.hpp"
#include "hardy/weights.hpp"

namespace hardy {

struct SolverConfig {
    double tol_step = 1e-14; // stop when max|delta_i| drops below this
    int max_iter = 200;
    bool damping = true; // false reproduces the plain Newton iteration
    std::optional<std::vector<double>> initial_points; // default: auto
};

struct IterationRecord {
    double energy;
    double step_inf_norm;
};

struct SolveResult {
    PointConfig points;
    int iterations;
    double final_step_inf_norm;
    EnergyReport energy_report;
    std::vector<IterationRecord> trace;
};

/// Thrown when the iteration limit is reached; carries the trace.
class ConvergenceError : public NumericError {
  public:
    ConvergenceError(const std::string& msg, std::vector<IterationRecord> trace)
        : NumericError(msg), trace(std::move(trace)) {}
    std::vector<IterationRecord> trace;
};

/// Starting configuration: n equispaced points on [x_L, x_R], where
/// x_L < 0 < x_R solve Q(x) = max(2, log n) by bisection on each side
/// (fallback +-n when no bracket exists below |x| = 10n).
PointConfig initialize(const Weight& wt, int n);

/// One Newton step: solves H delta = -g by Cholesky and returns
/// (delta, a + alpha*delta). With damping, alpha is the largest of
/// 1, 1/2, 1/4, ... keeping the points ordered and the energy strictly
/// decreasing; alpha underflow below 2^-40 raises a stall error. Steps
/// already small against the configuration scale (or below tol_step)
/// skip the descent test, whose energy differences would be lost to
/// rounding there. Without damping, alpha = 1 and an ordering
/// violation is an error.
std::pair<Eigen::VectorXd, PointConfig> newton_step(const Weight& wt, const PointConfig& a,
                                                    bool damping = true,
                                                    double tol_step = 1e-14);

/// Full Newton iteration to the energy minimizer. Deterministic for
/// fixed (wt, n, cfg). Throws ConvergenceError past max_iter.
SolveResult solve(const Weight& wt, int n, const SolverConfig& cfg = {});

} // namespace hardy
