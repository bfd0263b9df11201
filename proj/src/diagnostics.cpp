#include "hardy/diagnostics.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "hardy/approx.hpp"
#include "hardy/energy.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernel.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/stable_math.hpp"

namespace hardy {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct GridRange {
    double x1, x_last;
};

// Published evaluation ranges for the catalog weights.
bool catalog_range(const std::string& name, GridRange& out) {
    if (name == "w1") out = {-25.0, 25.0};
    else if (name == "w2") out = {-10.0, 10.0};
    else if (name == "w3") out = {-3.0, 3.0};
    else if (name == "w4") out = {-100.0, 100.0};
    else if (name == "w5") out = {-6.0, 6.0};
    else if (name == "w6") out = {-40.0, 100.0};
    else if (name == "w7") out = {-4.5, 5.5};
    else return false;
    return true;
}

// Outermost |x| on the given side with w(x) <= threshold, by bisection
// on Q(x) = -log(threshold).
double w_level_crossing(const Weight& wt, double threshold, int side) {
    const double tau = -std::log(threshold);
    if (!(wt.q(0.0) < tau)) return 0.0;
    double lo = 0.0, hi = 0.0;
    for (double b = 1.0; b <= 1e6; b *= 2.0) {
        if (wt.q(side * b) >= tau) {
            hi = b;
            break;
        }
        lo = b;
    }
    if (hi == 0.0) throw NumericError("make_grid: weight does not reach the threshold");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (wt.q(side * mid) >= tau)
            hi = mid;
        else
            lo = mid;
    }
    return side * hi;
}

// integral of K over (0, g], and of t K(t) over (0, g], via t = e^{-u}.
// The transformed integrands are smooth and decay like u e^{-u}.
double kernel_moment(const Weight& wt, double g, int power, int quad_order) {
    const double u0 = -std::log(g);
    const double span = 75.0; // e^{-75} tail is far below any tolerance here
    const int panels = 16;
    auto f = [&](double u) {
        double t = std::exp(-u);
        return green_kernel(wt.d, t) * std::exp(-(power + 1) * u);
    };
    return gauss_integrate_composite(f, u0, u0 + span, quad_order, panels);
}

} // namespace

EvalGrid make_eval_grid(double x1, double x_last, int count) {
    if (count < 2) throw UsageError("evaluation grid needs at least 2 points");
    if (!(x1 < x_last)) throw UsageError("evaluation grid needs x1 < x_last");
    EvalGrid grid{x1, x_last, count, {}};
    grid.points.resize(static_cast<size_t>(count));
    const double step = (x_last - x1) / (count - 1);
    for (int i = 0; i < count; ++i) grid.points[static_cast<size_t>(i)] = x1 + step * i;
    grid.points.front() = x1;
    grid.points.back() = x_last;
    return grid;
}

EvalGrid make_grid(const Weight& wt, double threshold, bool symmetric, int count) {
    if (!(threshold > 0.0) || threshold >= 1.0)
        throw UsageError("make_grid: threshold must lie in (0, 1)");
    GridRange r;
    if (!catalog_range(wt.name, r)) {
        r.x1 = w_level_crossing(wt, threshold, -1);
        r.x_last = symmetric ? -r.x1 : w_level_crossing(wt, threshold, +1);
    }
    return make_eval_grid(r.x1, r.x_last, count);
}

double sup_error(const std::function<double(double)>& approx,
                 const std::function<double(double)>& f, const EvalGrid& grid) {
    double m = 0.0;
    for (double x : grid.points) m = std::max(m, std::abs(f(x) - approx(x)));
    return m;
}

ErrorTable error_table(const Weight& wt, const std::function<double(double)>& f,
                       const std::vector<int>& n_values, const EvalGrid& grid, bool with_sinc,
                       const SolverConfig& solver_cfg) {
    ErrorTable table;
    table.reserve(n_values.size());
    for (int n : n_values) {
        SolveResult res = solve(wt, n, solver_cfg);
        Approximant one(wt, res.points, f, BaryForm::I);
        Approximant two(wt, res.points, f, BaryForm::II);
        ErrorRow row;
        row.n = n;
        row.err_form_one = sup_error([&](double x) { return one(x); }, f, grid);
        row.err_form_two = sup_error([&](double x) { return two(x); }, f, grid);
        if (with_sinc) {
            SincApproximant sc = build_sinc(wt, n);
            sample_sinc(sc, f);
            row.err_sinc = sup_error([&](double x) { return eval_sinc(sc, f, x); }, f, grid);
        } else {
            row.err_sinc = kNaN;
        }
        row.certificate = res.energy_report.certificate;
        assert(row.err_form_one >= 0.0 && row.err_form_two >= 0.0);
        assert(row.certificate > 0.0 && row.certificate <= 1.0);
        table.push_back(row);
    }
    return table;
}

LowerBoundCheck check_potential_lower_bound(const Weight& wt, const PointConfig& a_star,
                                            const EvalGrid& grid) {
    EnergyReport rep = f_d_constant(wt, a_star);
    double bound = rep.f_d / (a_star.size() - 1);
    double min_value = std::numeric_limits<double>::infinity();
    for (double x : grid.points) {
        double v = potential(wt, a_star, x) + wt.q(x);
        if (std::isfinite(v)) min_value = std::min(min_value, v);
    }
    return {min_value, bound, min_value >= bound - 1e-8};
}

AppendixReport appendix_quantities(const Weight& wt, const PointConfig& a_star, int quad_order) {
    if (quad_order < 8) throw UsageError("appendix_quantities: quad_order must be >= 8");
    const int n = a_star.size();
    if (n < 2) throw UsageError("appendix_quantities: need n >= 2");

    AppendixReport rep;
    rep.h_sep = a_star.min_gap();
    rep.applicable = a_star.max_gap() <= 1.0;
    rep.c_d = green_kernel(wt.d, 1.0); // -log tanh(pi/(4d))
    // Per-interval constants: point-vs-interval 1 + c_d per side,
    // interval-vs-interval 3/2 + c_d (the uniform log energy of a unit
    // interval is 3/2, so no smaller constant can dominate).
    rep.big_c_n = (3.5 + 3.0 * rep.c_d) * n + 1.5 + rep.c_d;

    // Augment with endpoints one gap g = min(1, h_sep) outside; this
    // keeps the end gaps within [h_sep, 1] whenever the report applies.
    const double g_end = std::min(1.0, rep.h_sep);
    std::vector<double> aug;
    aug.reserve(static_cast<size_t>(n + 2));
    aug.push_back(a_star[0] - g_end);
    for (int i = 0; i < n; ++i) aug.push_back(a_star[i]);
    aug.push_back(a_star[n - 1] + g_end);
    std::vector<double> gap(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) gap[static_cast<size_t>(i)] = aug[static_cast<size_t>(i + 1)] - aug[static_cast<size_t>(i)];

    // Quadrature values. S_i is the mean of K over each flanking gap;
    // T_i reduces to 1-D kernel moments over the diagonal offset:
    // T_i = (2/g) M0(g) - (2/g^2) M1(g).
    std::vector<double> mean0(static_cast<size_t>(n + 1));
    rep.t_quad_sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        double g = gap[static_cast<size_t>(i)];
        double m0 = kernel_moment(wt, g, 0, quad_order);
        double m1 = kernel_moment(wt, g, 1, quad_order);
        mean0[static_cast<size_t>(i)] = m0 / g;
        rep.t_quad_sum += 2.0 / g * m0 - 2.0 / (g * g) * m1;
    }
    rep.s_quad_sum = 0.0;
    for (int i = 1; i <= n; ++i)
        rep.s_quad_sum += mean0[static_cast<size_t>(i - 1)] + mean0[static_cast<size_t>(i)];

    // e1: the piecewise-uniform unit-mass measure integrates Q smoothly.
    double q_integral = 0.0;
    for (int i = 0; i <= n; ++i)
        q_integral += gauss_integrate(wt.q, aug[static_cast<size_t>(i)],
                                      aug[static_cast<size_t>(i + 1)], quad_order) /
                      gap[static_cast<size_t>(i)];
    double q_points = 0.0;
    for (int i = 0; i < n; ++i) q_points += wt.q(a_star[i]);
    rep.e1 = q_integral - (n - 1) / static_cast<double>(n) * q_points;

    if (rep.applicable) {
        rep.s_bound_sum = 0.0;
        for (int i = 1; i <= n; ++i)
            rep.s_bound_sum += -std::log(gap[static_cast<size_t>(i - 1)]) -
                               std::log(gap[static_cast<size_t>(i)]) + 2.0 * (1.0 + rep.c_d);
        rep.t_bound_sum = 0.0;
        for (int i = 0; i <= n; ++i)
            rep.t_bound_sum += -std::log(gap[static_cast<size_t>(i)]) + 1.5 + rep.c_d;
        rep.assembled_bound = -(3.0 * n + 1.0) * std::log(rep.h_sep) + rep.big_c_n + rep.e1;
    } else {
        rep.s_bound_sum = kNaN;
        rep.t_bound_sum = kNaN;
        rep.assembled_bound = kNaN;
    }
    return rep;
}

} // namespace hardy
