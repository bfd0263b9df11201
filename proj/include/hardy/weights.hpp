#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/kernel.hpp"

namespace hardy {

/// A weight function w on the real axis together with its strip
/// half-width and the external field Q = -log w with two derivatives.
/// Requirements: 0 < w(x) <= 1 and Q''(x) > 0 (strict log-concavity of w).
/// Immutable after construction; safe to share across threads.
struct Weight {
    std::string name;
    StripParam d;
    std::function<double(double)> w;
    std::function<double(double)> q;  // Q   = -log w
    std::function<double(double)> q1; // Q'
    std::function<double(double)> q2; // Q'' (must stay positive)
};

/// Built-in catalog entry by name ("w1" .. "w7"); epsilon shrinks the
/// strip half-width slightly below the critical value (w1-w3: pi/4,
/// w4/w6: pi, w5/w7: pi/2). Throws UsageError for unknown names.
Weight get_weight(std::string_view name, double epsilon = 1e-10);

/// Names accepted by get_weight, in catalog order.
const std::vector<std::string>& weight_names();

/// Numeric spot-check of the Weight contract on a grid.
struct ValidationReport {
    double max_q_logw_mismatch; // max |Q(x) + log w(x)|
    double min_q2;              // min Q''(x) over the grid
    double max_q1_mismatch;     // Q' vs central differences of Q, relative
    double max_q2_mismatch;     // Q'' vs second central differences, relative
    bool pass;                  // min_q2 > 0 and all mismatches < 1e-5
};

ValidationReport validate_weight(const Weight& wt, std::span<const double> grid);

} // namespace hardy
