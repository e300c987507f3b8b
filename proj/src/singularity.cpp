#include "fabry/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fabry/entire_product.hpp"
#include "fabry/errors.hpp"

namespace fabry {

double radius_estimate(const RealSequence& seq) {
    const IndexSet support = seq.support();
    if (support.size() < 10) {
        throw InsufficientData("radius_estimate: " + std::to_string(support.size()) +
                               " support points, need at least 10");
    }
    const Index n = seq.last_index();
    const Index start = std::max<Index>(1, (n + 1) / 2);
    const Index window = std::max<Index>(1, n / 10);

    double limsup = std::numeric_limits<double>::infinity();
    bool any = false;
    for (Index lo = start; lo <= n; lo += window) {
        const Index hi = std::min(n, lo + window - 1);
        double block_max = -1.0;
        for (Index m = lo; m <= hi; ++m) {
            if (!seq.in_support(m)) continue;
            const double a = std::abs(seq.values()[static_cast<std::size_t>(m)]);
            block_max = std::max(block_max, std::exp(std::log(a) / static_cast<double>(m)));
        }
        if (block_max < 0.0) continue;
        any = true;
        limsup = std::min(limsup, block_max);
    }
    if (!any) throw InsufficientData("radius_estimate: no support points in the top half of the range");
    return 1.0 / limsup;
}

double arc_margin(double angle, double delta) {
    return std::abs(normalize_angle(angle)) - std::numbers::pi * delta;
}

std::vector<PoleCluster> unit_circle_clusters(std::span<const Pole> poles, const ArcOptions& options) {
    std::vector<Pole> band;
    for (const Pole& p : poles) {
        if (std::abs(std::abs(p.z) - 1.0) <= options.band) band.push_back(p);
    }
    if (band.empty()) return {};
    std::sort(band.begin(), band.end(),
              [](const Pole& a, const Pole& b) { return std::arg(a.z) < std::arg(b.z); });

    // Split the circle at the widest angular gap so a cluster straddling
    // theta = pi stays whole.
    const std::size_t n = band.size();
    std::size_t start = 0;
    double widest = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::arg(band[i].z);
        const double b = std::arg(band[(i + 1) % n].z);
        double gap = b - a;
        if (gap <= 0.0) gap += 2.0 * std::numbers::pi;
        if (gap > widest) {
            widest = gap;
            start = (i + 1) % n;
        }
    }

    std::vector<PoleCluster> clusters;
    std::vector<const Pole*> members;
    auto flush = [&] {
        if (members.empty()) return;
        Complex direction = 0.0;
        PoleCluster c;
        c.nearest_abs_angle = std::numbers::pi;
        for (const Pole* p : members) {
            c.nearest_abs_angle = std::min(c.nearest_abs_angle, std::abs(std::arg(p->z)));
            direction += p->z / std::abs(p->z);
            c.modulus += std::abs(p->z);
            c.weight += p->weight;
        }
        c.count = static_cast<int>(members.size());
        c.modulus /= c.count;
        c.angle = normalize_angle(std::arg(direction));
        clusters.push_back(c);
        members.clear();
    };
    for (std::size_t k = 0; k < n; ++k) {
        const Pole& p = band[(start + k) % n];
        if (!members.empty()) {
            const double gap = std::abs(normalize_angle(std::arg(p.z) - std::arg(members.back()->z)));
            if (gap > options.cluster_angle) flush();
        }
        members.push_back(&p);
    }
    flush();
    std::sort(clusters.begin(), clusters.end(),
              [](const PoleCluster& a, const PoleCluster& b) { return a.angle < b.angle; });
    return clusters;
}

ArcClearance arc_clearance(std::span<const Pole> poles, double delta, const ArcOptions& options) {
    if (!(delta >= 0.0 && delta < 1.0)) throw std::invalid_argument("arc_clearance: Δ must lie in [0, 1)");
    ArcClearance out;
    out.delta = delta;
    out.clusters = unit_circle_clusters(poles, options);
    out.margin = std::numeric_limits<double>::infinity();
    for (const PoleCluster& c : out.clusters) out.margin = std::min(out.margin, c.nearest_abs_angle - std::numbers::pi * delta);
    out.on_arc = out.margin <= options.boundary_tolerance;
    return out;
}

SingularityReport probe(const RealSequence& seq, std::span<const double> deltas, const ProbeOptions& options) {
    SingularityReport report;
    try {
        report.radius = radius_estimate(seq);
    } catch (const InsufficientData& e) {
        report.notes.emplace_back(e.what());
    }

    const int degree = default_pade_degree(seq.last_index());
    const int L = options.L.value_or(degree);
    const int M = options.M.value_or(degree);
    report.approximant = pade(seq, L, M, options.pade);
    if (report.approximant.degenerate) {
        report.notes.emplace_back("Padé system singular down to M = 0; polynomial truncation used");
    }
    report.poles = poles(report.approximant, options.froissart);
    report.clusters = unit_circle_clusters(report.poles, options.arc);
    for (const double delta : deltas) report.arcs.push_back(arc_clearance(report.poles, delta, options.arc));

    if (report.clusters.empty()) {
        report.notes.emplace_back("no pole within the unit-circle band: singularity not localized");
    }
    for (const PoleCluster& c : report.clusters) {
        if (c.count >= options.arc.accumulation_count) {
            report.notes.emplace_back("cluster of >= " + std::to_string(c.count) + " poles near angle " +
                                      std::to_string(c.angle) +
                                      ": pole accumulation (branch point or natural boundary)");
        }
    }
    return report;
}

}  // namespace fabry
