#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fabry::cli {

enum ExitCode : int { kSuccess = 0, kVerdictFailure = 1, kInputError = 2 };

/// Everything a run needs, validated before any computation starts.
struct RunConfig {
    std::string subcommand;  // density, signs, product-eval, product-indicator, product-zeros, build, probe, verify-theorem1
    std::string input;
    std::optional<std::string> output;
    std::optional<std::string> csv_output;
    std::optional<std::string> coeffs;

    long long n = 0;
    std::vector<double> deltas;
    std::vector<double> r_grid;
    std::optional<double> x_lo;
    double gap_r = 0.1;
    long long m_min = 1;

    std::vector<std::string> z_points;
    double theta = 0.0;
    double t_max = 0.0;
    int grid_points = 96;
    double c = 0.0;
    double d = 0.0;
    std::optional<long long> scale_m;
    double scale_r = 0.1;

    std::optional<int> pade_L;
    std::optional<int> pade_M;
    std::optional<std::string> expect;  // "on-arc" or "clear"

    double support_tolerance = 1e-10;
    double regularity_tolerance = 0.05;
    double radius_tolerance = 0.05;
    double band = 0.05;
    double condition_limit = 1e10;
    double doublet_tolerance = 1e-6;

    /// Throws std::invalid_argument naming the first bad parameter.
    void validate() const;
};

/// Parses argv, runs the subcommand and writes reports. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fabry::cli
