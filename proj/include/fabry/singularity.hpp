#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fabry/pade.hpp"
#include "fabry/sign_analysis.hpp"

namespace fabry {

/// 1 / limsup |a_m|^{1/m}. The top half of the index range is tiled by
/// windows of 10% of N; the limsup is estimated as the smallest of the
/// per-window maxima of |a_m|^{1/m} over support points.
/// Throws InsufficientData with fewer than 10 support points.
double radius_estimate(const RealSequence& seq);

struct PoleCluster {
    double angle = 0.0;    // circular mean, in (-pi, pi]
    double nearest_abs_angle = 0.0;  // smallest |theta| among the members
    double modulus = 0.0;  // mean modulus
    double weight = 0.0;   // summed residue weights
    int count = 0;
};

struct ArcOptions {
    double band = 0.05;                 // poles with | |p| - 1 | <= band are on the circle
    double cluster_angle = 0.05;        // neighbouring angles closer than this merge
    double boundary_tolerance = 1e-8;   // closed arc: |theta| <= pi Δ + tolerance
    int accumulation_count = 3;         // clusters this large are reported as accumulations
};

struct ArcClearance {
    double delta = 0.0;
    std::vector<PoleCluster> clusters;
    bool on_arc = false;
    /// min over clusters of |theta| - pi Δ, with |theta| taken at the member
    /// closest to z = 1; +inf when no pole is near the circle.
    double margin = 0.0;
};

std::vector<PoleCluster> unit_circle_clusters(std::span<const Pole> poles, const ArcOptions& options = {});

/// Arc I_Δ = {e^{i theta} : |theta| <= pi Δ}, closed.
ArcClearance arc_clearance(std::span<const Pole> poles, double delta, const ArcOptions& options = {});

struct ProbeOptions {
    std::optional<int> L;  // default: floor(N/2) - 1
    std::optional<int> M;
    PadeOptions pade;
    FroissartPolicy froissart;
    ArcOptions arc;
};

/// Numerical evidence about singularities on the unit circle; never a proof.
struct SingularityReport {
    std::optional<double> radius;  // absent when there are too few support points
    PadeApproximant<double> approximant;
    std::vector<Pole> poles;
    std::vector<PoleCluster> clusters;
    std::vector<ArcClearance> arcs;
    std::vector<std::string> notes;
    bool numerical_evidence_only = true;
};

SingularityReport probe(const RealSequence& seq, std::span<const double> deltas,
                        const ProbeOptions& options = {});

/// Rotate an angle to (-pi, pi] and measure |theta| - pi Δ.
double arc_margin(double angle, double delta);

}  // namespace fabry
