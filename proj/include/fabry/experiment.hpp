#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fabry/density.hpp"
#include "fabry/series_builder.hpp"
#include "fabry/singularity.hpp"

namespace fabry {

enum class ExperimentBranch {
    /// Minimum density of Λ exceeds Δ: a series continuing across I_Δ is built.
    counterexample,
    /// Minimum density of Λ is at most Δ: a singularity on I_Δ is expected.
    singularity_expected,
};

const char* to_string(ExperimentBranch b) noexcept;

struct ExperimentOptions {
    std::vector<double> r_grid = default_r_grid();
    std::optional<double> x_lo;  // default_x_lo(horizon) when absent
    DensityOptions density;
    /// Density estimates within this distance of Δ are treated as the boundary
    /// case and routed to the singularity_expected branch.
    double decision_margin = 0.01;
    BuildOptions build;
    HypothesisOptions hypotheses;
    ProbeOptions probe;
};

struct ExperimentRecord {
    double delta = 0.0;
    Index n = 0;
    DensityCurve density;
    double lambda_variation = 0.0;
    ExperimentBranch branch = ExperimentBranch::singularity_expected;
    /// counterexample branch only.
    std::optional<ConstructionReport> construction;
    std::optional<Theorem1Hypotheses> hypotheses;
    /// The series handed to the probe.
    RealSequence series;
    IndexSet series_sign_changes;
    SingularityReport probe;
    std::map<std::string, Verdict> verdicts;
    std::vector<std::string> notes;

    /// No verdict failed.
    bool ok() const;
};

/// A subset of Λ whose counting function tracks target * x: t is kept iff the
/// count so far is below target * t. Its density is `target` whenever every
/// long window of Λ is denser than target.
IndexSet measured_subset(const IndexSet& lambda, double target);

/// a_m = (-1)^{#(Λ ∩ [1, m])}: |a_m| = 1 and the sign changes exactly on Λ ∩ [1, N].
RealSequence sign_pattern_series(const IndexSet& lambda, Index n);

/// Runs the full pipeline for Λ and Δ. `user_series`, when given, replaces the
/// constructed series in the singularity_expected branch.
ExperimentRecord theorem1_experiment(const IndexSet& lambda, double delta, Index n,
                                     const ExperimentOptions& options = {},
                                     const std::optional<RealSequence>& user_series = std::nullopt);

}  // namespace fabry
