#include "hardy/energy.hpp"

#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/kernel.hpp"

namespace hardy {

namespace {

void require_n2(const PointConfig& a, const char* op) {
    if (a.size() < 2)
        throw UsageError(std::string(op) + ": energy operations require n >= 2 points");
}

double field_coeff(int n) { return 2.0 * (n - 1) / static_cast<double>(n); }

} // namespace

double energy_value(const Weight& wt, const PointConfig& a) {
    require_n2(a, "energy_value");
    const int n = a.size();
    double kernel_sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) kernel_sum += green_kernel(wt.d, a[i] - a[j]);
    double field_sum = 0.0;
    for (int i = 0; i < n; ++i) field_sum += wt.q(a[i]);
    return 2.0 * kernel_sum + field_coeff(n) * field_sum;
}

Eigen::VectorXd energy_gradient(const Weight& wt, const PointConfig& a) {
    require_n2(a, "energy_gradient");
    const int n = a.size();
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double k1 = green_kernel_d1(wt.d, a[i] - a[j]); // odd: K'(a_j - a_i) = -k1
            g[i] += 2.0 * k1;
            g[j] -= 2.0 * k1;
        }
    const double c = field_coeff(n);
    for (int i = 0; i < n; ++i) g[i] += c * wt.q1(a[i]);
    return g;
}

Eigen::MatrixXd energy_hessian(const Weight& wt, const PointConfig& a) {
    require_n2(a, "energy_hessian");
    const int n = a.size();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double k2 = green_kernel_d2(wt.d, a[i] - a[j]); // even
            h(i, j) = -2.0 * k2;
            h(j, i) = -2.0 * k2;
            h(i, i) += 2.0 * k2;
            h(j, j) += 2.0 * k2;
        }
    const double c = field_coeff(n);
    for (int i = 0; i < n; ++i) h(i, i) += c * wt.q2(a[i]);
    return h;
}

double potential(const Weight& wt, const PointConfig& a, double x) {
    double u = 0.0;
    for (int i = 0; i < a.size(); ++i) u += green_kernel(wt.d, x - a[i]);
    return u;
}

EnergyReport f_d_constant(const Weight& wt, const PointConfig& a) {
    require_n2(a, "f_d_constant");
    const int n = a.size();
    double field_sum = 0.0;
    for (int i = 0; i < n; ++i) field_sum += wt.q(a[i]);
    EnergyReport rep;
    rep.energy = energy_value(wt, a);
    rep.grad_inf_norm = energy_gradient(wt, a).lpNorm<Eigen::Infinity>();
    rep.f_d = rep.energy - (n - 1) / static_cast<double>(n) * field_sum;
    rep.certificate = std::exp(-rep.f_d / n);
    return rep;
}

} // namespace hardy
