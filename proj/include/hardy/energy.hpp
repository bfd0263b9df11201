#pragma once

#include <Eigen/Core>

#include "hardy/point_config.hpp"
#include "hardy/weights.hpp"

namespace hardy {

/// Energy, stationarity and certificate data for a point configuration.
struct EnergyReport {
    double energy;        // I(a) = sum_{i!=j} K(a_i - a_j) + (2(n-1)/n) sum_i Q(a_i)
    double grad_inf_norm; // max-norm of the energy gradient at a
    double f_d;           // I(a) - ((n-1)/n) sum_i Q(a_i)
    double certificate;   // exp(-f_d / n), the a-priori sup-norm error bound
};

/// Discrete energy of the configuration. Requires n >= 2.
double energy_value(const Weight& wt, const PointConfig& a);

/// Gradient: g_l = 2 sum_{j != l} K'(a_l - a_j) + (2(n-1)/n) Q'(a_l).
Eigen::VectorXd energy_gradient(const Weight& wt, const PointConfig& a);

/// Dense symmetric Hessian: diagonal 2 sum_{j != l} K''(a_l - a_j)
/// + (2(n-1)/n) Q''(a_l), off-diagonal -2 K''(a_l - a_k). Strictly
/// diagonally dominant with positive diagonal, hence positive definite.
Eigen::MatrixXd energy_hessian(const Weight& wt, const PointConfig& a);

/// Discrete potential U(a; x) = sum_i K(x - a_i); +infinity exactly
/// when x coincides with a sampling point.
double potential(const Weight& wt, const PointConfig& a, double x);

/// Energy report at a (near-)stationary configuration. The gradient
/// norm is recorded, not enforced.
EnergyReport f_d_constant(const Weight& wt, const PointConfig& a);

} // namespace hardy
