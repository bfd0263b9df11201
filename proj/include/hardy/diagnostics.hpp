#pragma once

#include <functional>
#include <vector>

#include "hardy/optimizer.hpp"
#include "hardy/point_config.hpp"
#include "hardy/weights.hpp"

namespace hardy {

/// Equispaced evaluation grid x_l = x1 + (x_last - x1)/(count-1) (l-1).
struct EvalGrid {
    double x1;
    double x_last;
    int count;
    std::vector<double> points;
};

EvalGrid make_eval_grid(double x1, double x_last, int count = 1001);

/// Grid for error measurement. Catalog weights use the published ranges
/// (w1: +-25, w2: +-10, w3: +-3, w4: +-100, w5: +-6, w6: (-40,100),
/// w7: (-4.5,5.5)); other weights solve w(x1) <= threshold by bisection
/// on the left and, unless symmetric, on the right.
EvalGrid make_grid(const Weight& wt, double threshold, bool symmetric, int count = 1001);

/// max_l |f(x_l) - approx(x_l)|.
double sup_error(const std::function<double(double)>& approx,
                 const std::function<double(double)>& f, const EvalGrid& grid);

/// Per-n sup-norm errors of the two barycentric forms (and optionally
/// the sinc baseline) together with the error certificate.
struct ErrorRow {
    int n;
    double err_form_one;
    double err_form_two;
    double err_sinc; // NaN unless a sinc baseline was requested
    double certificate;
};
using ErrorTable = std::vector<ErrorRow>;

/// One solver run per n. with_sinc requires a weight with a published
/// sinc parameter rule (w4-w7).
ErrorTable error_table(const Weight& wt, const std::function<double(double)>& f,
                       const std::vector<int>& n_values, const EvalGrid& grid, bool with_sinc,
                       const SolverConfig& solver_cfg = {});

/// Check of the potential lower bound min_x [U(a; x) + Q(x)] >= f_d/(n-1).
struct LowerBoundCheck {
    double min_value; // min over the grid of U + Q
    double bound;     // f_d / (n - 1)
    bool pass;        // min_value >= bound - 1e-8
};

LowerBoundCheck check_potential_lower_bound(const Weight& wt, const PointConfig& a_star,
                                            const EvalGrid& grid);

/// Separation-distance diagnostics: the computable part of the gap
/// between the continuous and discrete energy constants. The singular
/// integrals S_i (point-vs-interval) and T_i (interval-vs-interval) are
/// evaluated by Gauss quadrature after the substitution t = e^{-u}
/// that removes the logarithmic singularity, and compared against
/// their closed-form upper bounds. Bound fields require every adjacent
/// gap <= 1 (applicable); otherwise they are NaN.
struct AppendixReport {
    double h_sep;           // min adjacent gap
    double c_d;             // -log tanh(pi/(4d))
    double big_c_n;         // (5/2 + 3 c_d) n + 1/2 + c_d
    double s_bound_sum;     // sum of analytic S_i bounds
    double t_bound_sum;     // sum of analytic T_i bounds
    double s_quad_sum;      // sum of S_i by quadrature
    double t_quad_sum;      // sum of T_i by quadrature
    double e1;              // integral of Q d(nu) - ((n-1)/n) sum Q(a_i)
    double assembled_bound; // -(3n+1) log h_sep + C_n + e1
    bool applicable;        // max adjacent gap <= 1
};

AppendixReport appendix_quantities(const Weight& wt, const PointConfig& a_star, int quad_order);

} // namespace hardy
