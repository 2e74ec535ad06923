#pragma once

#include <span>
#include <vector>

namespace lvf {

double mean(std::span<const double> xs);

/// Population variance (divisor n).
double variance(std::span<const double> xs);

/// Sample standard deviation (divisor n-1).
double sample_sd(std::span<const double> xs);

/// Type-7 empirical quantile (linear interpolation of order statistics).
/// Sorts a copy of the input.
double quantile_type7(std::vector<double> xs, double tau);

/// Type-7 quantiles for an ascending tau grid; sorts the input once.
std::vector<double> quantiles_type7(std::vector<double> xs, std::span<const double> taus);

/// Autocorrelation of a series at one lag.
double autocorrelation(std::span<const double> xs, int lag);

}  // namespace lvf
