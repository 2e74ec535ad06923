#include "lvf/core/quantile_forecast.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lvf {

QuantileForecast::QuantileForecast(std::int64_t origin, std::vector<double> taus,
                                   std::vector<std::vector<double>> values)
    : origin_(origin), taus_(std::move(taus)), values_(std::move(values)) {
    if (taus_.empty()) throw std::invalid_argument("QuantileForecast: empty tau grid");
    for (std::size_t i = 0; i < taus_.size(); ++i) {
        if (taus_[i] <= 0.0 || taus_[i] >= 1.0)
            throw std::invalid_argument("QuantileForecast: tau outside (0,1)");
        if (i > 0 && taus_[i] <= taus_[i - 1])
            throw std::invalid_argument("QuantileForecast: taus not strictly ascending");
    }
    for (const auto& row : values_) {
        if (row.size() != taus_.size())
            throw std::invalid_argument("QuantileForecast: row width differs from tau grid");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!std::isfinite(row[i]))
                throw std::invalid_argument("QuantileForecast: non-finite value");
            if (i > 0 && row[i] < row[i - 1])
                throw std::invalid_argument("QuantileForecast: quantile crossing");
        }
    }
}

QuantileForecast QuantileForecast::rearranged(std::int64_t origin, std::vector<double> taus,
                                              std::vector<std::vector<double>> values) {
    for (auto& row : values) std::sort(row.begin(), row.end());
    return QuantileForecast(origin, std::move(taus), std::move(values));
}

std::vector<double> QuantileForecast::point_forecast() const {
    std::vector<double> out;
    out.reserve(values_.size());
    for (int h = 1; h <= horizons(); ++h) out.push_back(quantile_at(h, 0.5));
    return out;
}

double QuantileForecast::quantile_at(int horizon, double tau) const {
    const auto& row = values_[static_cast<std::size_t>(horizon - 1)];
    if (tau <= taus_.front()) return row.front();
    if (tau >= taus_.back()) return row.back();
    auto it = std::lower_bound(taus_.begin(), taus_.end(), tau);
    std::size_t j = static_cast<std::size_t>(it - taus_.begin());
    if (taus_[j] == tau) return row[j];
    double w = (tau - taus_[j - 1]) / (taus_[j] - taus_[j - 1]);
    return row[j - 1] + w * (row[j] - row[j - 1]);
}

std::vector<double> default_tau_grid() {
    std::vector<double> taus;
    taus.reserve(99);
    for (int p = 1; p <= 99; ++p) taus.push_back(p / 100.0);
    return taus;
}

}  // namespace lvf
