#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lvf/core/calendar.hpp"

namespace lvf {

/**
 * Hourly load observations for one feeder.
 *
 * Index t = 1 is the first stored hour. The series must start at
 * midnight so that hour_of_day(t) matches the wall clock. The mask
 * marks points as observed (true) or interpolated/missing (false);
 * methods skip unmasked points.
 */
struct LoadSeries {
    std::string feeder_id;
    CivilDate start_date{};
    std::vector<double> values;  // kWh per hour
    std::vector<bool> mask;      // true = observed

    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }

    double value(std::int64_t t) const { return values[static_cast<std::size_t>(t - 1)]; }
    bool observed(std::int64_t t) const { return mask[static_cast<std::size_t>(t - 1)]; }

    /// Calendar date of a 1-based time index.
    CivilDate date_at(std::int64_t t) const {
        return start_date + std::chrono::days{(t - 1) / kHoursPerDay};
    }

    /// Throws std::invalid_argument if an invariant fails.
    void validate() const;
};

/// Convenience constructor with all points observed.
LoadSeries make_series(std::string feeder_id, CivilDate start, std::vector<double> values);

/**
 * Actual hourly temperatures plus per-day forecast vintages.
 *
 * The actual series shares the load clock (index 1 = midnight of
 * start_date). Each vintage is issued at 7AM of its origin day and
 * carries 96 hourly values; horizon h covers the hour starting at
 * 7AM + h.
 */
struct TemperatureData {
    CivilDate start_date{};
    std::vector<double> actual;  // degrees C
    std::map<CivilDate, std::vector<double>> forecasts;

    double actual_at(std::int64_t t) const { return actual[static_cast<std::size_t>(t - 1)]; }

    /// Vintage for an origin day, or nullptr when absent.
    const std::vector<double>* vintage(CivilDate origin_day) const {
        auto it = forecasts.find(origin_day);
        return it == forecasts.end() ? nullptr : &it->second;
    }

    void validate() const;
};

/**
 * Train/test boundary for one evaluation run.
 *
 * train_end is the paper-style t_h: the last training index, end-of-day
 * aligned. Test days are contiguous 1-based day numbers after t_h.
 */
struct SplitSpec {
    std::int64_t train_end = 0;
    std::vector<std::int64_t> test_days;
    int validation_weeks = 2;

    std::int64_t first_test_index() const { return train_end + 1; }

    void validate() const;

    /// Contiguous test days starting right after train_end.
    static SplitSpec after_training(std::int64_t train_end, int n_test_days,
                                    int validation_weeks = 2);
};

/// Forecast origin index for a 1-based day: the 7-8AM hour of that day.
/// Horizon k from this origin targets index origin + k, so horizon 1 is
/// the 8-9AM hour.
inline std::int64_t origin_index_for_day(std::int64_t day) {
    return (day - 1) * kHoursPerDay + 8;
}

}  // namespace lvf
