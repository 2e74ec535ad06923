#include "lvf/opt/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lvf {

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol,
                      int max_iter) {
    if (!(hi > lo)) throw std::invalid_argument("golden_section: empty interval");
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

namespace {

void clamp_to_box(std::vector<double>& x, const std::vector<double>& lower,
                  const std::vector<double>& upper) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const std::vector<double>& lower,
                             const std::vector<double>& upper, double tol, int max_iter) {
    const std::size_t n = start.size();
    if (n == 0 || lower.size() != n || upper.size() != n)
        throw std::invalid_argument("nelder_mead: dimension mismatch");
    clamp_to_box(start, lower, upper);

    // Initial simplex: start point plus a 5% step per coordinate.
    std::vector<std::vector<double>> pts(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) {
        double step = 0.05 * (upper[i] - lower[i]);
        if (pts[i + 1][i] + step > upper[i]) step = -step;
        pts[i + 1][i] += step;
        clamp_to_box(pts[i + 1], lower, upper);
    }
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        fv[i] = f(pts[i]);
        if (std::isnan(fv[i])) throw std::runtime_error("nelder_mead: objective returned NaN");
    }

    auto evaluate = [&](std::vector<double> x) {
        clamp_to_box(x, lower, upper);
        double v = f(x);
        if (std::isnan(v)) throw std::runtime_error("nelder_mead: objective returned NaN");
        return std::make_pair(std::move(x), v);
    };

    int it = 0;
    std::vector<std::size_t> order(n + 1);
    for (; it < max_iter; ++it) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::size_t best = order[0], worst = order[n], second = order[n - 1];

        double fspread = std::abs(fv[worst] - fv[best]);
        double xspread = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            xspread = std::max(xspread, std::abs(pts[worst][i] - pts[best][i]));
        if (fspread <= tol && xspread <= tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[k][i];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coef) {
            std::vector<double> x(n);
            for (std::size_t i = 0; i < n; ++i)
                x[i] = centroid[i] + coef * (pts[worst][i] - centroid[i]);
            return x;
        };

        auto [xr, fr] = evaluate(blend(-1.0));  // reflection
        if (fr < fv[best]) {
            auto [xe, fe] = evaluate(blend(-2.0));  // expansion
            if (fe < fr) {
                pts[worst] = std::move(xe);
                fv[worst] = fe;
            } else {
                pts[worst] = std::move(xr);
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            pts[worst] = std::move(xr);
            fv[worst] = fr;
        } else {
            // contraction, outside or inside of the worst point
            bool outside = fr < fv[worst];
            auto [xc, fc] = evaluate(blend(outside ? -0.5 : 0.5));
            if (fc < std::min(fr, fv[worst])) {
                pts[worst] = std::move(xc);
                fv[worst] = fc;
            } else {
                for (std::size_t k = 0; k <= n; ++k) {  // shrink toward best
                    if (k == best) continue;
                    for (std::size_t i = 0; i < n; ++i)
                        pts[k][i] = pts[best][i] + 0.5 * (pts[k][i] - pts[best][i]);
                    clamp_to_box(pts[k], lower, upper);
                    fv[k] = f(pts[k]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k <= n; ++k)
        if (fv[k] < fv[best]) best = k;
    return NelderMeadResult{pts[best], fv[best], it};
}

}  // namespace lvf
