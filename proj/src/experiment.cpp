#include "fabry/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fabry/errors.hpp"

namespace fabry {

const char* to_string(ExperimentBranch b) noexcept {
    return b == ExperimentBranch::counterexample ? "counterexample" : "singularity_expected";
}

bool ExperimentRecord::ok() const {
    for (const auto& [name, verdict] : verdicts) {
        if (verdict == Verdict::fail) return false;
    }
    return true;
}

IndexSet measured_subset(const IndexSet& lambda, double target) {
    if (!(target >= 0.0 && target <= 1.0)) throw std::invalid_argument("measured_subset: target outside [0, 1]");
    std::vector<Index> kept;
    for (const Index t : lambda.elements()) {
        if (t == 0) continue;
        if (static_cast<double>(kept.size()) < target * static_cast<double>(t)) kept.push_back(t);
    }
    return IndexSet(std::move(kept), lambda.horizon());
}

RealSequence sign_pattern_series(const IndexSet& lambda, Index n) {
    if (n > lambda.horizon()) throw HorizonExceeded("sign_pattern_series: N beyond the horizon of Λ");
    std::vector<double> a(static_cast<std::size_t>(n) + 1);
    double sign = 1.0;
    for (Index m = 0; m <= n; ++m) {
        if (m > 0 && lambda.contains(m)) sign = -sign;
        a[static_cast<std::size_t>(m)] = sign;
    }
    return RealSequence(std::move(a));
}

ExperimentRecord theorem1_experiment(const IndexSet& lambda, double delta, Index n,
                                     const ExperimentOptions& options,
                                     const std::optional<RealSequence>& user_series) {
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("theorem1_experiment: Δ must lie in [0, 1)");
    if (n < 1) throw std::invalid_argument("theorem1_experiment: N must be positive");

    ExperimentRecord record;
    record.delta = delta;
    record.n = n;
    record.density = density_curve(lambda, options.r_grid, options.x_lo.value_or(default_x_lo(lambda.horizon())),
                                   options.density);
    record.lambda_variation = density_variation(lambda);
    record.notes.emplace_back("density values are finite-horizon estimates at the smallest r");

    const double deltas[] = {delta};
    if (record.density.min_estimate > delta + options.decision_margin) {
        record.branch = ExperimentBranch::counterexample;
        IndexSet lambda_prime = lambda;
        if (record.lambda_variation > options.hypotheses.variation_tolerance) {
            const double target = 0.5 * (delta + record.density.min_estimate);
            lambda_prime = measured_subset(lambda, target);
            record.notes.emplace_back("Λ' is a measured subset of Λ with target density " + std::to_string(target));
        } else {
            record.notes.emplace_back("Λ' = Λ (n(x)/x is stable over the top decade)");
        }
        ConstructionReport construction = build_series(lambda_prime, n, options.build);
        record.hypotheses = verify_theorem1_hypotheses(construction, lambda, delta, options.hypotheses);
        record.series = construction.coefficients;
        record.series_sign_changes = construction.sign_changes;
        record.construction = std::move(construction);

        record.probe = probe(record.series, deltas, options.probe);
        for (const auto& [name, verdict] : record.hypotheses->as_map()) record.verdicts[name] = verdict;
        record.verdicts["no_singularity_on_arc"] = record.probe.arcs.front().on_arc ? Verdict::fail : Verdict::pass;
    } else {
        record.branch = ExperimentBranch::singularity_expected;
        if (std::abs(record.density.min_estimate - delta) <= options.decision_margin) {
            record.notes.emplace_back("boundary case: minimum density estimate within " +
                                      std::to_string(options.decision_margin) + " of Δ");
        }
        if (user_series) {
            if (user_series->last_index() < n) {
                throw std::invalid_argument("theorem1_experiment: supplied series has fewer than N + 1 coefficients");
            }
            std::vector<double> head(user_series->values().begin(),
                                     user_series->values().begin() + static_cast<std::ptrdiff_t>(n) + 1);
            record.series = RealSequence(std::move(head), user_series->support_tolerance());
            record.notes.emplace_back("probing the supplied series");
        } else {
            record.series = sign_pattern_series(lambda, n);
            record.notes.emplace_back("probing a_m = (-1)^{n(m, Λ)}, whose sign changes are exactly Λ ∩ [1, N]");
        }
        record.series_sign_changes = sign_change_set(record.series);

        Verdict in_lambda = Verdict::pass;
        for (const Index m : record.series_sign_changes.elements()) {
            if (!lambda.contains(m)) in_lambda = Verdict::inconclusive;
        }
        // A series outside the hypotheses says nothing about the theorem, so
        // hypothesis misses are inconclusive here rather than failures.
        record.verdicts["sign_changes_in_lambda"] = in_lambda;
        const RegularityProfile regularity = regularity_profile(record.series, std::max<Index>(1, n / 2));
        record.verdicts["regularity"] =
            regularity.empty_tail ? Verdict::inconclusive
            : regularity.max_deviation <= options.hypotheses.regularity_tolerance ? Verdict::pass
                                                                                  : Verdict::inconclusive;
        for (const auto& [name, verdict] : record.verdicts) {
            if (verdict == Verdict::inconclusive) record.notes.emplace_back("hypothesis not met: " + name);
        }

        record.probe = probe(record.series, deltas, options.probe);
        if (record.probe.arcs.front().on_arc) {
            record.verdicts["singularity_on_arc"] = Verdict::pass;
        } else {
            record.verdicts["singularity_on_arc"] = Verdict::inconclusive;
            record.notes.emplace_back("singularity on I_Δ not localized by the probe (absence is not implied)");
        }
    }
    return record;
}

}  // namespace fabry
