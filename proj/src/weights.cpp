#include "hardy/weights.hpp"

#include <cmath>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/stable_math.hpp"

namespace hardy {

namespace {

double sech(double u) { return 1.0 / std::cosh(u); }

Weight make_w1(double eps) {
    return {"w1", StripParam(kPi / 4.0 - eps),
            [](double x) { return sech(2.0 * x); },
            [](double x) { return log_cosh(2.0 * x); },
            [](double x) { return 2.0 * std::tanh(2.0 * x); },
            [](double x) { double s = sech(2.0 * x); return 4.0 * s * s; }};
}

Weight make_w2(double eps) {
    return {"w2", StripParam(kPi / 4.0 - eps),
            [](double x) { return std::exp(-x * x); },
            [](double x) { return x * x; },
            [](double x) { return 2.0 * x; },
            [](double) { return 2.0; }};
}

Weight make_w3(double eps) {
    // w3 = sech((pi/2) sinh 2x); Q1/Q2 from u = (pi/2) sinh 2x, u' = pi cosh 2x.
    return {"w3", StripParam(kPi / 4.0 - eps),
            [](double x) { return sech(kPi / 2.0 * std::sinh(2.0 * x)); },
            [](double x) { return log_cosh(kPi / 2.0 * std::sinh(2.0 * x)); },
            [](double x) {
                return kPi * std::cosh(2.0 * x) * std::tanh(kPi / 2.0 * std::sinh(2.0 * x));
            },
            [](double x) {
                double u = kPi / 2.0 * std::sinh(2.0 * x);
                double du = kPi * std::cosh(2.0 * x);
                double se = sech(u);
                return 2.0 * kPi * std::sinh(2.0 * x) * std::tanh(u) + du * du * se * se;
            }};
}

Weight make_w4(double eps) {
    return {"w4", StripParam(kPi - eps),
            [](double x) { return sech(0.5 * x); },
            [](double x) { return log_cosh(0.5 * x); },
            [](double x) { return 0.5 * std::tanh(0.5 * x); },
            [](double x) { double s = sech(0.5 * x); return 0.25 * s * s; }};
}

Weight make_w5(double eps) {
    return {"w5", StripParam(kPi / 2.0 - eps),
            [](double x) { return sech(kPi / 2.0 * std::sinh(x)); },
            [](double x) { return log_cosh(kPi / 2.0 * std::sinh(x)); },
            [](double x) {
                return kPi / 2.0 * std::cosh(x) * std::tanh(kPi / 2.0 * std::sinh(x));
            },
            [](double x) {
                double u = kPi / 2.0 * std::sinh(x);
                double du = kPi / 2.0 * std::cosh(x);
                double se = sech(u);
                return kPi / 2.0 * std::sinh(x) * std::tanh(u) + du * du * se * se;
            }};
}

// Q6(x) = (1/2) log(1+e^x) + (3/2) log(1+e^{-x}); Q6'' = 2 sigma(x) sigma(-x).
double q6(double x) { return 0.5 * log1pexp(x) + 1.5 * log1pexp(-x); }
double q6_d1(double x) { return 0.5 * logistic(x) - 1.5 * logistic(-x); }
double q6_d2(double x) { return 2.0 * logistic(x) * logistic(-x); }

Weight make_w6(double eps) {
    return {"w6", StripParam(kPi - eps),
            [](double x) { return std::exp(-q6(x)); },
            q6, q6_d1, q6_d2};
}

Weight make_w7(double eps) {
    // Same shape as w6 composed with s = pi sinh x.
    return {"w7", StripParam(kPi / 2.0 - eps),
            [](double x) { return std::exp(-q6(kPi * std::sinh(x))); },
            [](double x) { return q6(kPi * std::sinh(x)); },
            [](double x) { return q6_d1(kPi * std::sinh(x)) * kPi * std::cosh(x); },
            [](double x) {
                double s = kPi * std::sinh(x);
                double ds = kPi * std::cosh(x);
                return q6_d2(s) * ds * ds + q6_d1(s) * kPi * std::sinh(x);
            }};
}

} // namespace

const std::vector<std::string>& weight_names() {
    static const std::vector<std::string> names = {"w1", "w2", "w3", "w4", "w5", "w6", "w7"};
    return names;
}

Weight get_weight(std::string_view name, double epsilon) {
    if (!(epsilon > 0.0) || epsilon >= 0.1)
        throw UsageError("epsilon must lie in (0, 0.1)");
    if (name == "w1") return make_w1(epsilon);
    if (name == "w2") return make_w2(epsilon);
    if (name == "w3") return make_w3(epsilon);
    if (name == "w4") return make_w4(epsilon);
    if (name == "w5") return make_w5(epsilon);
    if (name == "w6") return make_w6(epsilon);
    if (name == "w7") return make_w7(epsilon);
    std::ostringstream msg;
    msg << "unknown weight '" << name << "'; available:";
    for (const auto& n : weight_names()) msg << ' ' << n;
    throw UsageError(msg.str());
}

ValidationReport validate_weight(const Weight& wt, std::span<const double> grid) {
    if (grid.empty()) throw UsageError("validation grid must be nonempty");
    ValidationReport rep{0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0, false};
    const double h1 = 1e-6; // first-derivative step
    const double h2 = 1e-4; // second-derivative step (balances cancellation)
    for (double x : grid) {
        if (!std::isfinite(x)) throw UsageError("validation grid must be finite");
        double wv = wt.w(x);
        double q = wt.q(x);
        if (wv > 0.0 && std::isfinite(q))
            rep.max_q_logw_mismatch = std::max(rep.max_q_logw_mismatch, std::abs(q + std::log(wv)));

        double q1 = wt.q1(x);
        double fd1 = (wt.q(x + h1) - wt.q(x - h1)) / (2.0 * h1);
        rep.max_q1_mismatch =
            std::max(rep.max_q1_mismatch, std::abs(q1 - fd1) / std::max(1.0, std::abs(q1)));

        double q2 = wt.q2(x);
        double fd2 = (wt.q(x + h2) - 2.0 * wt.q(x) + wt.q(x - h2)) / (h2 * h2);
        rep.max_q2_mismatch =
            std::max(rep.max_q2_mismatch, std::abs(q2 - fd2) / std::max(1.0, std::abs(q2)));

        rep.min_q2 = std::min(rep.min_q2, q2);
    }
    rep.pass = rep.min_q2 > 0.0 && rep.max_q_logw_mismatch < 1e-5 &&
               rep.max_q1_mismatch < 1e-5 && rep.max_q2_mismatch < 1e-5;
    return rep;
}

} // namespace hardy
