#pragma once

#include <functional>
#include <vector>

namespace lvf {

/// Golden-section search for a scalar minimum on [lo, hi].
/// Returns the bracketing midpoint once the interval shrinks below tol.
double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-6, int max_iter = 200);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

/**
 * Nelder-Mead simplex with box constraints enforced by projection.
 * Coefficients: reflection 1, expansion 2, contraction 0.5, shrink 0.5.
 * Stops when the simplex spread in both x and f drops below tol, or
 * after max_iter iterations. The returned point never scores worse
 * than the start point.
 */
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const std::vector<double>& lower,
                             const std::vector<double>& upper, double tol = 1e-4,
                             int max_iter = 200);

}  // namespace lvf
