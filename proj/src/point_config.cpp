#include "hardy/point_config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

namespace {
constexpr double kGapFactor = 1e-13;

double coincidence_limit(double a, double b) {
    return kGapFactor * std::max({1.0, std::abs(a), std::abs(b)});
}
} // namespace

PointConfig::PointConfig(std::vector<double> points) : pts_(std::move(points)) {
    if (pts_.empty()) throw UsageError("point configuration must be nonempty");
    for (double a : pts_)
        if (!std::isfinite(a)) throw UsageError("point configuration must be finite");
    if (!strictly_ordered(pts_))
        throw UsageError("point configuration must be strictly increasing");
    for (size_t i = 0; i + 1 < pts_.size(); ++i) {
        if (pts_[i + 1] - pts_[i] < coincidence_limit(pts_[i], pts_[i + 1]))
            throw NumericError("near-coincident sampling points (conditioning)");
    }
}

double PointConfig::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < pts_.size(); ++i) g = std::min(g, pts_[i + 1] - pts_[i]);
    return g;
}

double PointConfig::max_gap() const {
    double g = 0.0;
    for (size_t i = 0; i + 1 < pts_.size(); ++i) g = std::max(g, pts_[i + 1] - pts_[i]);
    return g;
}

bool PointConfig::strictly_ordered(std::span<const double> v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i] < v[i + 1])) return false;
    return true;
}

bool PointConfig::well_separated(std::span<const double> v) {
    if (!strictly_ordered(v)) return false;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] - v[i] < coincidence_limit(v[i], v[i + 1])) return false;
    return true;
}

} // namespace hardy
