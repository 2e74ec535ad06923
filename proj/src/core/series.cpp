#include "lvf/core/series.hpp"

#include <stdexcept>

namespace lvf {

void LoadSeries::validate() const {
    if (values.empty()) throw std::invalid_argument("LoadSeries: empty values");
    if (mask.size() != values.size())
        throw std::invalid_argument("LoadSeries: mask length differs from values length");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (mask[i] && values[i] < 0.0)
            throw std::invalid_argument("LoadSeries: negative observed value at index " +
                                        std::to_string(i + 1));
    }
}

LoadSeries make_series(std::string feeder_id, CivilDate start, std::vector<double> values) {
    LoadSeries s;
    s.feeder_id = std::move(feeder_id);
    s.start_date = start;
    s.mask.assign(values.size(), true);
    s.values = std::move(values);
    s.validate();
    return s;
}

void TemperatureData::validate() const {
    for (const auto& [day, vintage] : forecasts) {
        if (vintage.size() != 96)
            throw std::invalid_argument("TemperatureData: vintage must have 96 horizons");
    }
}

void SplitSpec::validate() const {
    if (train_end <= 0 || train_end % kHoursPerDay != 0)
        throw std::invalid_argument("SplitSpec: train_end must be a positive multiple of 24");
    if (test_days.empty()) throw std::invalid_argument("SplitSpec: no test days");
    std::int64_t first_day = train_end / kHoursPerDay + 1;
    if (test_days.front() < first_day)
        throw std::invalid_argument("SplitSpec: test days must start after train_end");
    for (std::size_t i = 1; i < test_days.size(); ++i) {
        if (test_days[i] != test_days[i - 1] + 1)
            throw std::invalid_argument("SplitSpec: test days must be contiguous");
    }
    if (validation_weeks < 0) throw std::invalid_argument("SplitSpec: negative validation weeks");
}

SplitSpec SplitSpec::after_training(std::int64_t train_end, int n_test_days,
                                    int validation_weeks) {
    SplitSpec split;
    split.train_end = train_end;
    split.validation_weeks = validation_weeks;
    std::int64_t first_day = train_end / kHoursPerDay + 1;
    for (int i = 0; i < n_test_days; ++i) split.test_days.push_back(first_day + i);
    split.validate();
    return split;
}

}  // namespace lvf
