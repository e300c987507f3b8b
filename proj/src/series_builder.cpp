#include "fabry/series_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fabry/density.hpp"
#include "fabry/errors.hpp"
#include "fabry/singularity.hpp"

namespace fabry {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ConstructionReport build_series(const IndexSet& lambda_prime, Index n, const BuildOptions& options) {
    if (n < 0) throw std::invalid_argument("build_series: N must be non-negative");
    if (n > lambda_prime.horizon()) {
        throw HorizonExceeded("build_series: N=" + std::to_string(n) + " beyond horizon " +
                              std::to_string(lambda_prime.horizon()));
    }
    const Index horizon = lambda_prime.horizon();
    if (static_cast<double>(horizon) < kTruncationRatio * static_cast<double>(n) || horizon < 1) {
        throw TruncationInsufficient("build_series: horizon " + std::to_string(horizon) +
                                     " cannot support truncation >= 20N for N=" + std::to_string(n));
    }

    ConstructionReport report;
    report.lambda_prime = lambda_prime;
    report.n = n;
    report.delta_prime = empirical_density(lambda_prime);
    report.density_variation = density_variation(lambda_prime);

    IndexSet zeros = lambda_prime.complement();
    const double rho = empirical_density(zeros);
    report.product = make_product_spec(std::move(zeros), rho, horizon);
    const ProductEvaluator product(report.product);

    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    for (Index m = 0; m <= n; ++m) {
        // F vanishes exactly on S, and at_integer returns an exact 0 there.
        const double f = product.at_integer(m);
        a[static_cast<std::size_t>(m)] = m % 2 == 0 ? f : -f;
    }
    a[0] = 1.0;
    // Zeros on S are exact, so the support is read off with tolerance 0. The
    // configured tolerance is still checked: a Λ' coefficient below it would
    // be lost once the series is re-read under that tolerance.
    const RealSequence thresholded(a, options.support_tolerance);
    report.coefficients = RealSequence(std::move(a), 0.0);

    const IndexSet support = report.coefficients.support();
    const IndexSet expected = lambda_prime.truncated(n);
    bool support_exact = support.contains(0);
    for (const Index m : expected.elements()) {
        if (m > 0 && !support.contains(m)) support_exact = false;
    }
    for (const Index m : support.elements()) {
        if (m > 0 && !expected.contains(m)) support_exact = false;
    }

    report.sign_changes = sign_change_set(report.coefficients);
    const RegularityProfile regularity =
        regularity_profile(report.coefficients, std::max<Index>(1, n / 2));
    report.regularity_deviation = regularity.max_deviation;
    report.predicted_clear_arc_halfangle = std::numbers::pi * report.delta_prime;

    bool changes_in_support = true;
    for (const Index m : report.sign_changes.elements()) {
        if (!support.contains(m)) changes_in_support = false;
    }
    report.checks["a0_is_one"] = report.coefficients.values()[0] == 1.0;
    report.checks["support_exact"] = support_exact;
    report.checks["support_above_tolerance"] = thresholded.support() == support;
    report.checks["sign_changes_in_support"] = changes_in_support;
    report.checks["regularity"] = !regularity.empty_tail &&
                                  report.regularity_deviation <= options.regularity_tolerance;
    return report;
}

std::map<std::string, Verdict> Theorem1Hypotheses::as_map() const {
    return {
        {"sign_changes_in_lambda", sign_changes_in_lambda},
        {"regularity", regularity},
        {"radius_one", radius_one},
        {"density_exceeds_delta", density_exceeds_delta},
    };
}

Theorem1Hypotheses verify_theorem1_hypotheses(const ConstructionReport& report, const IndexSet& lambda,
                                              double delta, const HypothesisOptions& options) {
    Theorem1Hypotheses out;
    out.delta = delta;

    if (lambda.horizon() < report.n) {
        throw HorizonExceeded("verify_theorem1_hypotheses: Λ horizon " + std::to_string(lambda.horizon()) +
                              " is below N=" + std::to_string(report.n));
    }
    out.sign_changes_in_lambda = Verdict::pass;
    for (const Index m : report.sign_changes.elements()) {
        if (!lambda.contains(m)) {
            out.sign_changes_in_lambda = Verdict::fail;
            break;
        }
    }

    out.regularity = report.regularity_deviation <= options.regularity_tolerance ? Verdict::pass
                                                                                 : Verdict::fail;

    try {
        out.radius = radius_estimate(report.coefficients);
        out.radius_one = std::abs(out.radius - 1.0) <= options.radius_tolerance ? Verdict::pass
                                                                                : Verdict::fail;
    } catch (const InsufficientData&) {
        out.radius_one = Verdict::inconclusive;
    }

    if (report.density_variation > options.variation_tolerance) {
        out.density_exceeds_delta = Verdict::inconclusive;
    } else {
        out.density_exceeds_delta = report.delta_prime > delta ? Verdict::pass : Verdict::fail;
    }
    return out;
}

}  // namespace fabry
