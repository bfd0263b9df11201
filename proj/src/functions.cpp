#include "hardy/functions.hpp"

#include <cmath>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/stable_math.hpp"
#include "hardy/weights.hpp"

namespace hardy {

double g1(double t) { return std::sqrt(1.0 - t * t) * (1.0 + t * t); }

double g2(double t) {
    return std::sqrt(1.0 - t) * (1.0 + t) * std::sqrt(1.0 + t) * (1.0 + t * t);
}

namespace {

double sech(double u) { return 1.0 / std::cosh(u); }

const std::vector<NamedFunction>& catalog() {
    static const std::vector<NamedFunction> entries = {
        {"f1", "w1", [](double x) { return sech(2.0 * x); }},
        {"f2", "w2",
         [](double x) {
             double p = kPi / 4.0;
             return x * x / (p * p + x * x) * std::exp(-x * x);
         }},
        {"f3", "w3", [](double x) { return sech(kPi / 2.0 * std::sinh(2.0 * x)); }},
        // f4 = g1(tanh(x/2)), in closed form w4(x) (1 + tanh^2(x/2))
        {"f4", "w4",
         [](double x) {
             double t = std::tanh(0.5 * x);
             return sech(0.5 * x) * (1.0 + t * t);
         }},
        {"f5", "w5",
         [](double x) {
             double u = kPi / 2.0 * std::sinh(x);
             double t = std::tanh(u);
             return sech(u) * (1.0 + t * t);
         }},
        // f6 = g2(tanh(x/2)) = 4 w6(x) (1 + tanh^2(x/2))
        {"f6", "w6",
         [](double x) {
             double t = std::tanh(0.5 * x);
             double q = 0.5 * log1pexp(x) + 1.5 * log1pexp(-x);
             return 4.0 * std::exp(-q) * (1.0 + t * t);
         }},
        {"f7", "w7",
         [](double x) {
             double s = kPi * std::sinh(x);
             double t = std::tanh(0.5 * s);
             double q = 0.5 * log1pexp(s) + 1.5 * log1pexp(-s);
             return 4.0 * std::exp(-q) * (1.0 + t * t);
         }},
    };
    return entries;
}

} // namespace

NamedFunction get_function(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    std::ostringstream msg;
    msg << "unknown function '" << name << "'; available:";
    for (const auto& e : catalog()) msg << ' ' << e.name;
    msg << " weight-itself";
    throw UsageError(msg.str());
}

const std::vector<std::string>& function_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : catalog()) v.push_back(e.name);
        return v;
    }();
    return names;
}

} // namespace hardy
