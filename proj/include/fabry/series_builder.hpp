#pragma once

#include <map>
#include <string>

#include "fabry/entire_product.hpp"
#include "fabry/index_set.hpp"
#include "fabry/sign_analysis.hpp"

namespace fabry {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v) noexcept;

/// The power series a_m = (-1)^m F(m) with F the product over the complement
/// S of Λ', together with the diagnostics that go with it.
struct ConstructionReport {
    IndexSet lambda_prime;
    Index n = 0;
    /// Empirical density of Λ' at its horizon; 1 - tail density of the product.
    double delta_prime = 0.0;
    /// Spread of n(x)/x over the top decade of the horizon.
    double density_variation = 0.0;
    ProductSpec product;
    RealSequence coefficients;
    IndexSet sign_changes;
    double regularity_deviation = 0.0;
    /// Half-angle of the arc {|theta| < pi Δ'} across which the series continues.
    double predicted_clear_arc_halfangle = 0.0;
    std::map<std::string, bool> checks;
};

struct BuildOptions {
    double support_tolerance = kDefaultSupportTolerance;
    double regularity_tolerance = 0.05;
};

/// Builds a_0..a_N from Λ'. The product is truncated at the horizon of Λ',
/// which must be at least 20 N.
ConstructionReport build_series(const IndexSet& lambda_prime, Index n,
                                const BuildOptions& options = {});

struct HypothesisOptions {
    double regularity_tolerance = 0.05;
    double radius_tolerance = 0.05;
    /// Above this spread of n(x)/x the density of Λ' is reported inconclusive.
    double variation_tolerance = 0.02;
};

struct Theorem1Hypotheses {
    Verdict sign_changes_in_lambda = Verdict::inconclusive;
    Verdict regularity = Verdict::inconclusive;
    Verdict radius_one = Verdict::inconclusive;
    /// pass when the measured density of Λ' exceeds Δ.
    Verdict density_exceeds_delta = Verdict::inconclusive;
    double radius = 0.0;
    double delta = 0.0;

    std::map<std::string, Verdict> as_map() const;
};

Theorem1Hypotheses verify_theorem1_hypotheses(const ConstructionReport& report,
                                              const IndexSet& lambda, double delta,
                                              const HypothesisOptions& options = {});

}  // namespace fabry
