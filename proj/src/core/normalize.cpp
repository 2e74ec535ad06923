#include "lvf/core/normalize.hpp"

#include <limits>
#include <stdexcept>

namespace lvf {

std::vector<double> MinMaxScale::normalize(std::span<const double> xs) const {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(normalize(x));
    return out;
}

std::vector<double> MinMaxScale::denormalize(std::span<const double> zs) const {
    std::vector<double> out;
    out.reserve(zs.size());
    for (double z : zs) out.push_back(denormalize(z));
    return out;
}

MinMaxScale MinMaxScale::fit(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("MinMaxScale: no values");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    if (!(hi > lo)) throw std::invalid_argument("MinMaxScale: constant series (hi == lo)");
    return MinMaxScale{lo, hi};
}

MinMaxScale MinMaxScale::fit_masked(std::span<const double> values,
                                    const std::vector<bool>& mask) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i < mask.size() && !mask[i]) continue;
        if (values[i] < lo) lo = values[i];
        if (values[i] > hi) hi = values[i];
    }
    if (!(hi > lo)) throw std::invalid_argument("MinMaxScale: constant series (hi == lo)");
    return MinMaxScale{lo, hi};
}

}  // namespace lvf
