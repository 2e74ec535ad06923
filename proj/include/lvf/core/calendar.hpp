#pragma once

#include <chrono>
#include <cstdint>

namespace lvf {

/// Calendar day, midnight UTC.
using CivilDate = std::chrono::sys_days;

constexpr int kHoursPerDay = 24;
constexpr int kHoursPerWeek = 168;
constexpr int kWeeksPerYear = 52;

/// Hour-of-day slot of a 1-based time index, in 1..24.
/// Index 1 covers the 12AM-1AM hour of day 1.
inline int hour_of_day(std::int64_t t) {
    return static_cast<int>((t - 1) % kHoursPerDay) + 1;
}

/// Week-period slot of a 1-based time index, in 1..168.
inline int period_of_week(std::int64_t t) {
    return static_cast<int>((t - 1) % kHoursPerWeek) + 1;
}

/// 1-based day number of a 1-based time index. All 24 hours of a
/// calendar day share one day index.
inline std::int64_t day_index(std::int64_t t) {
    return (t - 1) / kHoursPerDay + 1;
}

/// First time index of a 1-based day number.
inline std::int64_t first_hour_of_day(std::int64_t day) {
    return (day - 1) * kHoursPerDay + 1;
}

/// Monday-started week of the year, in 1..52. Week 1 starts on the
/// first Monday of the year; days before it map to 52, and any week
/// past 52 clamps to 52.
int week_of_year(CivilDate date);

/// ISO weekday of a date, 1 = Monday .. 7 = Sunday.
int iso_weekday(CivilDate date);

}  // namespace lvf
