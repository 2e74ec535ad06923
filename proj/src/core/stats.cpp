#include "lvf/core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lvf {

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean: empty input");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
    double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample_sd: need at least 2 points");
    double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

namespace {

double quantile_sorted(const std::vector<double>& xs, double tau) {
    std::size_t n = xs.size();
    if (n == 1) return xs[0];
    double h = tau * static_cast<double>(n - 1);
    auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo >= n - 1) return xs[n - 1];
    double w = h - static_cast<double>(lo);
    return xs[lo] + w * (xs[lo + 1] - xs[lo]);
}

}  // namespace

double quantile_type7(std::vector<double> xs, double tau) {
    if (xs.empty()) throw std::invalid_argument("quantile: empty input");
    std::sort(xs.begin(), xs.end());
    return quantile_sorted(xs, tau);
}

std::vector<double> quantiles_type7(std::vector<double> xs, std::span<const double> taus) {
    if (xs.empty()) throw std::invalid_argument("quantile: empty input");
    std::sort(xs.begin(), xs.end());
    std::vector<double> out;
    out.reserve(taus.size());
    for (double tau : taus) out.push_back(quantile_sorted(xs, tau));
    return out;
}

double autocorrelation(std::span<const double> xs, int lag) {
    auto n = static_cast<std::int64_t>(xs.size());
    if (lag < 0 || lag >= n) throw std::invalid_argument("autocorrelation: bad lag");
    double m = mean(xs);
    double num = 0.0;
    double den = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        den += (xs[i] - m) * (xs[i] - m);
        if (i + lag < n) num += (xs[i] - m) * (xs[i + lag] - m);
    }
    if (den == 0.0) throw std::invalid_argument("autocorrelation: constant series");
    return num / den;
}

}  // namespace lvf
