#pragma once

#include <span>
#include <vector>

namespace hardy {

/// Strictly increasing sampling points a_1 < ... < a_n. Construction
/// validates ordering and rejects near-coincident points (adjacent gap
/// below 1e-13 * max(1, |a|)), where the kernel derivatives blow up.
/// n == 1 is allowed here; the energy and solver operations require
/// n >= 2 and enforce that themselves.
class PointConfig {
  public:
    explicit PointConfig(std::vector<double> points);

    [[nodiscard]] int size() const { return static_cast<int>(pts_.size()); }
    [[nodiscard]] double operator[](int i) const { return pts_[static_cast<size_t>(i)]; }
    [[nodiscard]] std::span<const double> view() const { return pts_; }
    [[nodiscard]] const std::vector<double>& values() const { return pts_; }

    /// Smallest adjacent gap; +infinity for n == 1.
    [[nodiscard]] double min_gap() const;
    /// Largest adjacent gap; 0 for n == 1.
    [[nodiscard]] double max_gap() const;

    static bool strictly_ordered(std::span<const double> v);
    /// Ordered and no adjacent pair closer than the conditioning limit.
    static bool well_separated(std::span<const double> v);

  private:
    std::vector<double> pts_;
};

} // namespace hardy
