#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

/// Benchmark function paired with its catalog weight. f1-f3 decay like
/// w1-w3 on the real line; f4-f7 are endpoint-singular functions on
/// (-1,1) carried to the real line by the tanh / double-exponential maps.
struct NamedFunction {
    std::string name;
    std::string paired_weight;
    std::function<double(double)> f;
};

/// Catalog entry by name ("f1" .. "f7"). Throws UsageError otherwise.
NamedFunction get_function(std::string_view name);

const std::vector<std::string>& function_names();

/// The two (-1,1) prototypes behind f4-f7.
double g1(double t); // sqrt(1-t^2) (1+t^2)
double g2(double t); // (1-t)^(1/2) (1+t)^(3/2) (1+t^2)

} // namespace hardy
