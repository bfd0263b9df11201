#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/kernel.hpp"
#include "hardy/stable_math.hpp"

using namespace hardy;

namespace {
const double kQuarterPi = kPi / 4.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Direct-formula oracle, independent of the library's stable path.
double kernel_oracle(double d, double x) { return -std::log(std::abs(std::tanh(kPi * x / (4.0 * d)))); }
} // namespace

TEST_CASE("t_map matches tanh and is odd") {
    StripParam d(kQuarterPi); // pi x/(4d) == x
    CHECK(t_map(d, 0.0) == 0.0);
    CHECK(t_map(d, 1.0) == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
    CHECK(t_map(d, -1.0) == -t_map(d, 1.0));
    for (double x = -6.0; x <= 6.0; x += 0.37) {
        CHECK(t_map(d, x) == -t_map(d, -x));
        CHECK(std::abs(t_map(d, x)) <= 1.0);
    }
    // strictly increasing until the representable saturation near |x| ~ 18
    double prev = -2.0;
    for (double x = -15.0; x <= 15.0; x += 0.5) {
        double v = t_map(d, x);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("s_map value and T'(0) T / T' identity") {
    StripParam d(kQuarterPi);
    CHECK(s_map(d, 0.0) == 0.0);
    CHECK(s_map(d, 1.0) == doctest::Approx(0.5 * std::sinh(2.0)).epsilon(1e-15));

    StripParam d1(1.0);
    double x = 0.7;
    double u = kPi * x / 4.0;
    double t = std::tanh(u);
    double tp = kPi / 4.0 * (1.0 - t * t);       // T_d'(x)
    double rhs = (kPi / 4.0) * t / tp;           // T'(0) T(x) / T'(x)
    CHECK(s_map(d1, x) == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("green_kernel values, evenness, positivity") {
    StripParam d(kQuarterPi);
    CHECK(green_kernel(d, 1.0) == doctest::Approx(-std::log(std::tanh(1.0))).epsilon(1e-14));
    CHECK(green_kernel(d, 0.5) == green_kernel(d, -0.5));
    CHECK(green_kernel(d, 0.0) == kInf);
    for (double x : {1e-8, 1e-3, 0.1, 1.0, 5.0, 40.0, 200.0}) {
        double k = green_kernel(d, x);
        CHECK(k > 0.0);
        CHECK(std::isfinite(k));
        CHECK(k == doctest::Approx(kernel_oracle(kQuarterPi, x)).epsilon(1e-12));
    }
    // far tail must neither overflow nor go NaN
    CHECK(green_kernel(d, 1e6) >= 0.0);
    CHECK(!std::isnan(green_kernel(d, 1e300)));
}

TEST_CASE("green_kernel log bound for |x| <= 1") {
    StripParam d(kQuarterPi);
    for (double x : {0.1, 0.5, 1.0})
        CHECK(green_kernel(d, x) <= -std::log(x * std::tanh(kPi / (4.0 * d.d))) + 1e-14);
}

TEST_CASE("kernel derivatives: symmetry, positivity, singularity") {
    StripParam d1(1.0);
    CHECK(green_kernel_d1(d1, 0.3) + green_kernel_d1(d1, -0.3) == 0.0);
    StripParam dq(kQuarterPi);
    for (double x : {0.1, 1.0, 5.0}) {
        CHECK(green_kernel_d2(dq, x) > 0.0);
        CHECK(green_kernel_d2(dq, -x) == green_kernel_d2(dq, x));
    }
    CHECK_THROWS_AS(green_kernel_d1(d1, 0.0), UsageError);
    CHECK_THROWS_AS(green_kernel_d2(d1, 0.0), UsageError);
    // graceful decay instead of inf/inf for large arguments
    CHECK(green_kernel_d2(d1, 1e4) == 0.0);
    CHECK(green_kernel_d1(d1, 1e4) == 0.0);
}

TEST_CASE("kernel derivatives match central finite differences") {
    StripParam d1(1.0);
    const double h = 1e-5;
    {
        double x = 0.7;
        double fd = (green_kernel(d1, x + h) - green_kernel(d1, x - h)) / (2.0 * h);
        CHECK(std::abs(green_kernel_d1(d1, x) - fd) <= 1e-6);
    }
    for (StripParam d : {StripParam(1.0), StripParam(kQuarterPi)}) {
        for (double x : {0.2, 0.7, 1.5, 3.0, -0.9}) {
            double fd1 = (green_kernel(d, x + h) - green_kernel(d, x - h)) / (2.0 * h);
            double d1v = green_kernel_d1(d, x);
            CHECK(std::abs(d1v - fd1) / std::max(1.0, std::abs(d1v)) <= 1e-6);
            double fd2 = (green_kernel_d1(d, x + h) - green_kernel_d1(d, x - h)) / (2.0 * h);
            double d2v = green_kernel_d2(d, x);
            CHECK(std::abs(d2v - fd2) / std::max(1.0, std::abs(d2v)) <= 1e-6);
        }
    }
}

TEST_CASE("log_blaschke single factor, zeros, and product oracle") {
    StripParam d(kQuarterPi);
    std::vector<double> single = {0.0};
    SignedLog b = log_blaschke(d, single, 1.0);
    CHECK(b.sign == 1);
    CHECK(b.log_abs == doctest::Approx(std::log(std::tanh(1.0))).epsilon(1e-14));

    std::vector<double> pts = {-1.7, -0.4, 0.2, 1.1, 2.6};
    SignedLog zero = log_blaschke(d, pts, 0.2);
    CHECK(zero.sign == 0);
    CHECK(zero.log_abs == -kInf);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        double x = ux(rng);
        double direct = 1.0;
        for (double a : pts) direct *= std::tanh(kPi * (x - a) / (4.0 * d.d));
        SignedLog sl = log_blaschke(d, pts, x);
        CHECK(sl.sign == (direct > 0.0 ? 1 : -1));
        CHECK(sl.sign * std::exp(sl.log_abs) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("log_blaschke equals minus the kernel sum") {
    StripParam d(kQuarterPi);
    std::vector<double> pts = {-2.0, -0.5, 0.3, 0.9, 2.2};
    for (double x : {-2.7, 0.37, 1.4, 3.3}) {
        double ksum = 0.0;
        for (double a : pts) ksum += green_kernel(d, x - a);
        CHECK(std::abs(log_blaschke(d, pts, x).log_abs + ksum) <= 1e-12);
    }
}

TEST_CASE("StripParam rejects nonpositive half-width") {
    CHECK_THROWS_AS(StripParam(0.0), UsageError);
    CHECK_THROWS_AS(StripParam(-1.0), UsageError);
}
