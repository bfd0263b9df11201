#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hardy::cli {

/// Parsed command, resolved against defaults and any config file.
/// Runs are fully deterministic: identical settings produce
/// byte-identical CSV output.
struct RunConfig {
    std::string command; // points | approx | errors | compare-sinc | bound | diag
    std::string weight;
    double epsilon = 1e-10;
    int n = 0;
    std::vector<int> n_list;
    std::string form = "I";       // I | II (approx command)
    std::string function;         // f1..f7, "weight-itself", or empty = paired
    std::optional<double> x1;     // grid overrides
    std::optional<double> x_last;
    int grid_count = 1001;
    std::string out;              // output path; empty = stdout
    bool pure_newton = false;
    int quad_order = 32;
};

/// Execute one command, writing CSV/text to `out` and diagnostics to
/// `err`. Returns the process exit code (0 ok, 2 usage, 3 numerical).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point (parses argv, then run()).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Floats in CSV output carry 17 significant digits.
std::string format_float(double v);

} // namespace hardy::cli
