#include "fabry/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fabry/errors.hpp"

namespace fabry {

std::vector<double> default_r_grid() { return {0.5, 0.2, 0.1, 0.05, 0.02, 0.01}; }

double default_x_lo(Index horizon) { return std::max(1.0, static_cast<double>(horizon) / 3.0); }

DensityCurve density_curve(const IndexSet& set, const std::vector<double>& r_grid, double x_lo,
                           const DensityOptions& options) {
    if (r_grid.empty()) throw std::invalid_argument("density_curve: empty r grid");
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > 0.0)) throw std::invalid_argument("density_curve: r must be positive");
        if (i > 0 && !(r_grid[i] < r_grid[i - 1])) {
            throw std::invalid_argument("density_curve: r grid must be strictly decreasing");
        }
    }
    if (!(x_lo >= 1.0)) throw std::invalid_argument("density_curve: x_lo must be >= 1");
    if (!(options.grid_ratio > 1.0)) throw std::invalid_argument("density_curve: grid ratio <= 1");

    DensityCurve curve;
    curve.x_lo = x_lo;
    const auto horizon = static_cast<double>(set.horizon());

    for (const double r : r_grid) {
        if (r * x_lo < options.min_window_points) continue;
        const double x_hi = horizon / (1.0 + r);
        if (x_hi < x_lo) continue;

        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        // Grid points are x_lo * ratio^k, computed from k directly so each
        // cell is independent of the others.
        for (int k = 0;; ++k) {
            double x = x_lo * std::pow(options.grid_ratio, k);
            const bool last = x >= x_hi;
            if (last) x = x_hi;
            const double d = set.window_density(x, r);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            if (last) break;
        }
        curve.r_values.push_back(r);
        curve.inf_window.push_back(lo);
        curve.sup_window.push_back(hi);
        curve.x_hi.push_back(x_hi);
    }

    if (curve.r_values.empty()) {
        throw InsufficientHorizon("density_curve: no r in the grid has a feasible x range above x_lo=" +
                                  std::to_string(x_lo) + " within horizon " +
                                  std::to_string(set.horizon()));
    }
    curve.min_estimate = curve.inf_window.back();
    curve.max_estimate = curve.sup_window.back();
    return curve;
}

double empirical_density(const IndexSet& set) {
    if (set.horizon() == 0) return 0.0;
    const Index positives = set.counting(static_cast<double>(set.horizon())) - set.counting(0.0);
    return static_cast<double>(positives) / static_cast<double>(set.horizon());
}

double density_variation(const IndexSet& set, double grid_ratio) {
    const auto horizon = static_cast<double>(set.horizon());
    const double start = std::max(1.0, horizon / 10.0);
    if (horizon < 1.0) return 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int k = 0;; ++k) {
        double x = start * std::pow(grid_ratio, k);
        const bool last = x >= horizon;
        if (last) x = horizon;
        const double v = static_cast<double>(set.counting(x)) / x;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (last) break;
    }
    return hi - lo;
}

}  // namespace fabry
