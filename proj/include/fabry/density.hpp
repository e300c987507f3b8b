#pragma once

#include <vector>

#include "fabry/index_set.hpp"

namespace fabry {

/// Window densities (n((1+r)x) - n(x)) / (r x) scanned over x for a decreasing
/// grid of r. The scalar summaries are the inf/sup at the smallest retained r:
/// finite-horizon estimates of the minimum and maximum density, not limits.
struct DensityCurve {
    std::vector<double> r_values;
    std::vector<double> inf_window;
    std::vector<double> sup_window;
    std::vector<double> x_hi;  // per r: horizon / (1 + r)
    double x_lo = 0.0;
    double min_estimate = 0.0;
    double max_estimate = 0.0;
};

struct DensityOptions {
    double grid_ratio = 1.01;
    // r is dropped from the grid when r * x_lo falls below this many lattice points.
    double min_window_points = 10.0;
};

std::vector<double> default_r_grid();

/// Scan start used when the caller does not pick one: the top two thirds of
/// the horizon, where the estimates are closest to their asymptotic values.
double default_x_lo(Index horizon);

DensityCurve density_curve(const IndexSet& set, const std::vector<double>& r_grid, double x_lo,
                           const DensityOptions& options = {});

/// #(set ∩ [1, horizon]) / horizon.
double empirical_density(const IndexSet& set);

/// max - min of n(x)/x over a geometric grid on [horizon/10, horizon]. Small
/// values are consistent with a measurable set; no verdict is implied.
double density_variation(const IndexSet& set, double grid_ratio = 1.01);

}  // namespace fabry
