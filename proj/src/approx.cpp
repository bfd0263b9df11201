#include "hardy/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/stable_math.hpp"

namespace hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double node_window(double a) { return 1e-12 * std::max(1.0, std::abs(a)); }

// Signed log-space term t_k = 2 lambda_k / sinh(c (x - a_k)), c = pi/(2d).
SignedLog sinh_quotient_term(const SignedLog& lambda, double c, double dx) {
    double u = c * dx;
    SignedLog t;
    t.log_abs = kLn2 + lambda.log_abs - log_sinh_abs(u);
    t.sign = lambda.sign * (u > 0.0 ? 1 : -1);
    return t;
}

// Max-shifted signed exponential sum: returns (log scale M, sum S) with
// total = S * exp(M). Terms with sign 0 are skipped.
struct ShiftedSum {
    double log_shift;
    double sum;
};

ShiftedSum signed_exp_sum(const std::vector<SignedLog>& terms) {
    double m = -kInf;
    for (const auto& t : terms)
        if (t.sign != 0) m = std::max(m, t.log_abs);
    if (m == -kInf) return {0.0, 0.0};
    double s = 0.0;
    for (const auto& t : terms)
        if (t.sign != 0) s += t.sign * std::exp(t.log_abs - m);
    return {m, s};
}

} // namespace

std::vector<SignedLog> build_lambda(const Weight& wt, const PointConfig& points) {
    const int n = points.size();
    std::vector<SignedLog> lambda(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double log_abs = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            log_abs += green_kernel(wt.d, points[k] - points[j]);
        }
        // exactly n-1-k factors with a_k - a_j < 0, each contributing -1
        int sign = ((n - 1 - k) % 2 == 0) ? 1 : -1;
        lambda[static_cast<size_t>(k)] = {log_abs, sign};
    }
    return lambda;
}

Approximant::Approximant(Weight wt, PointConfig points, const std::function<double(double)>& f,
                         BaryForm form)
    : wt_(std::move(wt)), points_(std::move(points)),
      log_lambda_(build_lambda(wt_, points_)), form_(form) {
    samples_.reserve(static_cast<size_t>(points_.size()));
    for (int k = 0; k < points_.size(); ++k) {
        double a = points_[k];
        double wa = wt_.w(a);
        if (!(wa > 0.0) || !std::isfinite(wa))
            throw NumericError("approximant: weight vanished at a sampling point");
        samples_.push_back(f(a) / wa);
    }
}

int Approximant::snapped_node(double x) const {
    const auto& v = points_.values();
    auto it = std::lower_bound(v.begin(), v.end(), x);
    int best = -1;
    double best_dist = kInf;
    for (auto cand : {it, it == v.begin() ? it : std::prev(it)}) {
        if (cand == v.end()) continue;
        double dist = std::abs(x - *cand);
        if (dist < best_dist) {
            best_dist = dist;
            best = static_cast<int>(cand - v.begin());
        }
    }
    if (best >= 0 && best_dist < node_window(points_[best])) return best;
    return -1;
}

double Approximant::operator()(double x) const {
    return form_ == BaryForm::I ? eval_first_form(x) : eval_second_form(x);
}

double Approximant::eval_first_form(double x) const {
    // Inside the node window the 0*inf cancellation loses all precision;
    // return the interpolated limit f(a_k) w(x)/w(a_k) instead.
    if (int k = snapped_node(x); k >= 0) return samples_[static_cast<size_t>(k)] * wt_.w(x);

    const int n = points_.size();
    const double c = kPi / (2.0 * wt_.d.d);
    SignedLog blaschke = log_blaschke(wt_.d, points_.view(), x);

    std::vector<SignedLog> terms(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double rk = samples_[static_cast<size_t>(k)];
        if (rk == 0.0) {
            terms[static_cast<size_t>(k)] = {-kInf, 0};
            continue;
        }
        SignedLog t = sinh_quotient_term(log_lambda_[static_cast<size_t>(k)], c, x - points_[k]);
        t.log_abs += std::log(std::abs(rk));
        t.sign *= rk > 0.0 ? 1 : -1;
        terms[static_cast<size_t>(k)] = t;
    }
    ShiftedSum s = signed_exp_sum(terms);
    if (s.sum == 0.0) return 0.0;
    return wt_.w(x) * blaschke.sign * s.sum * std::exp(blaschke.log_abs + s.log_shift);
}

double Approximant::eval_second_form(double x) const {
    if (int k = snapped_node(x); k >= 0) return samples_[static_cast<size_t>(k)] * wt_.w(x);

    const int n = points_.size();
    const double c = kPi / (2.0 * wt_.d.d);
    std::vector<SignedLog> num(static_cast<size_t>(n)), den(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        SignedLog t = sinh_quotient_term(log_lambda_[static_cast<size_t>(k)], c, x - points_[k]);
        den[static_cast<size_t>(k)] = t;
        double rk = samples_[static_cast<size_t>(k)];
        if (rk == 0.0) {
            num[static_cast<size_t>(k)] = {-kInf, 0};
        } else {
            num[static_cast<size_t>(k)] = {t.log_abs + std::log(std::abs(rk)),
                                           t.sign * (rk > 0.0 ? 1 : -1)};
        }
    }
    ShiftedSum sn = signed_exp_sum(num);
    ShiftedSum sd = signed_exp_sum(den);
    if (sd.sum == 0.0) {
        std::ostringstream msg;
        msg << "formula II denominator vanished at x = " << x;
        throw NumericError(msg.str());
    }
    if (sn.sum == 0.0) return 0.0;
    return wt_.w(x) * (sn.sum / sd.sum) * std::exp(sn.log_shift - sd.log_shift);
}

std::function<double(double)> make_transformed_function(std::function<double(double)> g,
                                                        Transform t) {
    switch (t) {
    case Transform::tanh_map:
        return [g = std::move(g)](double x) { return g(std::tanh(0.5 * x)); };
    case Transform::de_map:
        return [g = std::move(g)](double x) { return g(std::tanh(kPi / 2.0 * std::sinh(x))); };
    case Transform::none:
        return g;
    }
    throw UsageError("make_transformed_function: unknown transform");
}

SincApproximant build_sinc(std::string_view weight_name, int n, double epsilon) {
    if (n < 3) throw UsageError("build_sinc: need n >= 3 samples");
    SincApproximant app;
    if (weight_name == "w4" || weight_name == "w5") {
        app.transform = weight_name == "w4" ? Transform::tanh_map : Transform::de_map;
        app.n_minus = (n - 1) / 2;
        app.n_plus = n - 1 - app.n_minus;
        app.h = weight_name == "w4"
                    ? std::sqrt(4.0 * kPi * (kPi - epsilon) / n)
                    : 2.0 / n * std::log((kPi - 2.0 * epsilon) * n);
    } else if (weight_name == "w6") {
        app.transform = Transform::tanh_map;
        app.h = std::sqrt(8.0 * kPi * (kPi - epsilon) / (3.0 * n));
        app.n_minus = n / 4;
        app.n_plus = n - 1 - app.n_minus;
    } else if (weight_name == "w7") {
        app.transform = Transform::de_map;
        double d7 = kPi / 2.0 - epsilon;
        app.h = 2.0 / n * std::log(d7 * n / std::sqrt(1.5));
        app.n_minus = static_cast<int>(std::floor(n / 2.0 - std::log(1.5) / (2.0 * app.h)));
        app.n_plus = n - 1 - app.n_minus;
    } else {
        std::ostringstream msg;
        msg << "build_sinc: no sinc parameter rule for weight '" << weight_name
            << "' (supported: w4 w5 w6 w7)";
        throw UsageError(msg.str());
    }
    return app;
}

SincApproximant build_sinc(const Weight& wt, int n) {
    double critical = (wt.name == "w4" || wt.name == "w6") ? kPi : kPi / 2.0;
    return build_sinc(wt.name, n, critical - wt.d.d);
}

void sample_sinc(SincApproximant& app, const std::function<double(double)>& f) {
    app.samples.clear();
    app.samples.reserve(static_cast<size_t>(app.n_minus + app.n_plus + 1));
    for (int k = -app.n_minus; k <= app.n_plus; ++k) app.samples.push_back(f(k * app.h));
}

double eval_sinc(const SincApproximant& app, const std::function<double(double)>& f, double x) {
    const bool have_samples =
        app.samples.size() == static_cast<size_t>(app.n_minus + app.n_plus + 1);
    auto value_at = [&](int k) {
        return have_samples ? app.samples[static_cast<size_t>(k + app.n_minus)] : f(k * app.h);
    };
    // Exact cardinal property at the sample abscissae.
    double j = std::round(x / app.h);
    if (j >= -app.n_minus && j <= app.n_plus && x == j * app.h)
        return value_at(static_cast<int>(j));
    double s = 0.0;
    for (int k = -app.n_minus; k <= app.n_plus; ++k) s += value_at(k) * sinc(x / app.h - k);
    return s;
}

} // namespace hardy
