#pragma once

#include <span>
#include <vector>

namespace lvf {

/**
 * Min-max scale record fitted on training data. Values outside the
 * training range map outside [0,1] and are passed through unclipped.
 */
struct MinMaxScale {
    double lo = 0.0;
    double hi = 1.0;

    double normalize(double x) const { return (x - lo) / (hi - lo); }
    double denormalize(double z) const { return lo + z * (hi - lo); }

    std::vector<double> normalize(std::span<const double> xs) const;
    std::vector<double> denormalize(std::span<const double> zs) const;

    /// Fit from the min/max of the given values. Throws when the range
    /// is degenerate (hi == lo).
    static MinMaxScale fit(std::span<const double> values);

    /// Fit over observed points only.
    static MinMaxScale fit_masked(std::span<const double> values, const std::vector<bool>& mask);
};

}  // namespace lvf
