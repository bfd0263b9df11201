#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "hardy/kernel.hpp"
#include "hardy/point_config.hpp"
#include "hardy/weights.hpp"

namespace hardy {

enum class BaryForm { I, II };

/// Barycentric weights lambda_k = prod_{j != k} 1/tanh(pi (a_k - a_j)/(4d))
/// in (log-magnitude, sign) form; log|lambda_k| = sum_{j != k} K(a_k - a_j)
/// and sign(lambda_k) = (-1)^(n-k) for 1-based k. Entirely log-space, so
/// n ~ 100 with widely spread points cannot overflow.
std::vector<SignedLog> build_lambda(const Weight& wt, const PointConfig& points);

/// Interpolant through f at the sampling points, evaluated by the first
/// (product) or second (quotient) barycentric form. Immutable after
/// construction; evaluations at distinct x are pure and thread-safe.
class Approximant {
  public:
    Approximant(Weight wt, PointConfig points, const std::function<double(double)>& f,
                BaryForm form);

    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] BaryForm form() const { return form_; }
    [[nodiscard]] const PointConfig& points() const { return points_; }
    [[nodiscard]] const std::vector<SignedLog>& log_lambda() const { return log_lambda_; }

  private:
    [[nodiscard]] double eval_first_form(double x) const;
    [[nodiscard]] double eval_second_form(double x) const;
    // Index of a node within the snapping window of x, or -1.
    [[nodiscard]] int snapped_node(double x) const;

    Weight wt_;
    PointConfig points_;
    std::vector<SignedLog> log_lambda_;
    std::vector<double> samples_; // f(a_k) / w(a_k)
    BaryForm form_;
};

/// Variable transformations carrying functions on (-1,1) to the real line.
enum class Transform { tanh_map, de_map, none };

/// x -> g(psi(x)) with psi = tanh(x/2) (tanh_map) or
/// psi = tanh((pi/2) sinh x) (de_map).
std::function<double(double)> make_transformed_function(std::function<double(double)> g,
                                                        Transform t);

/// Cardinal-series baseline sum_{k=-N-}^{N+} f(kh) sinc(x/h - k).
struct SincApproximant {
    Transform transform;
    double h;
    int n_minus;
    int n_plus;
    std::vector<double> samples; // f(kh), filled by sample_sinc; may be empty
};

/// Step size and truncation split for the weights that have published
/// sinc parameter rules (w4-w7). Total sample count is n. For even n
/// with w4/w5 the split is N- = floor((n-1)/2), N+ = n-1-N-.
SincApproximant build_sinc(std::string_view weight_name, int n, double epsilon = 1e-10);

/// Same, with epsilon recovered from the catalog weight's strip width.
SincApproximant build_sinc(const Weight& wt, int n);

/// Precompute the samples f(kh), k = -N- .. N+.
void sample_sinc(SincApproximant& app, const std::function<double(double)>& f);

/// Evaluate the cardinal series; uses precomputed samples when present,
/// otherwise calls f directly. Exact at the sample abscissae.
double eval_sinc(const SincApproximant& app, const std::function<double(double)>& f, double x);

} // namespace hardy
