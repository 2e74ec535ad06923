#pragma once

#include <cstdint>
#include <vector>

namespace lvf {

/**
 * Predicted load quantiles over a fixed tau grid for horizons issued
 * from one origin.
 *
 * Construction rejects crossing rows; producers that cannot guarantee
 * monotone quantiles go through rearranged(), which sorts each row.
 */
class QuantileForecast {
public:
    QuantileForecast(std::int64_t origin, std::vector<double> taus,
                     std::vector<std::vector<double>> values);

    /// Sorts each horizon's quantile vector before constructing.
    static QuantileForecast rearranged(std::int64_t origin, std::vector<double> taus,
                                       std::vector<std::vector<double>> values);

    std::int64_t origin() const { return origin_; }
    const std::vector<double>& taus() const { return taus_; }
    int horizons() const { return static_cast<int>(values_.size()); }

    /// Quantile row for a 1-based horizon.
    const std::vector<double>& row(int horizon) const {
        return values_[static_cast<std::size_t>(horizon - 1)];
    }

    double value(int horizon, std::size_t tau_index) const {
        return values_[static_cast<std::size_t>(horizon - 1)][tau_index];
    }

    /// Median column: the tau = 0.5 quantile (interpolated when the
    /// grid does not contain 0.5 exactly).
    std::vector<double> point_forecast() const;

    /// Quantile at an arbitrary tau by linear interpolation on the grid.
    double quantile_at(int horizon, double tau) const;

private:
    std::int64_t origin_;
    std::vector<double> taus_;
    std::vector<std::vector<double>> values_;  // [horizon][tau]
};

/// Ascending percentile grid {1/100, ..., 99/100}.
std::vector<double> default_tau_grid();

}  // namespace lvf
