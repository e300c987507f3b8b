#include "fabry/sign_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fabry {

RealSequence::RealSequence(std::vector<double> values, double support_tolerance)
    : values_(std::move(values)), tolerance_(support_tolerance) {
    if (values_.empty()) throw std::invalid_argument("RealSequence: need at least a_0");
    if (!(tolerance_ >= 0.0)) throw std::invalid_argument("RealSequence: negative tolerance");
    for (const double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("RealSequence: non-finite coefficient");
        max_abs_ = std::max(max_abs_, std::abs(v));
    }
}

bool RealSequence::in_support(Index m) const {
    const double v = values_.at(static_cast<std::size_t>(m));
    return v != 0.0 && std::abs(v) > tolerance_ * max_abs_;
}

IndexSet RealSequence::support() const {
    std::vector<Index> out;
    for (Index m = 0; m <= last_index(); ++m) {
        if (in_support(m)) out.push_back(m);
    }
    return IndexSet(std::move(out), last_index());
}

IndexSet sign_change_set(const RealSequence& seq) {
    std::vector<Index> out;
    int previous = 0;
    for (Index m = 0; m <= seq.last_index(); ++m) {
        if (!seq.in_support(m)) continue;
        const int sign = seq.values()[static_cast<std::size_t>(m)] > 0.0 ? 1 : -1;
        if (previous != 0 && sign != previous) out.push_back(m);
        previous = sign;
    }
    return IndexSet(std::move(out), seq.last_index());
}

Index zero_count_lower_bound(const RealSequence& seq) {
    const auto changes = static_cast<Index>(sign_change_set(seq).size());
    return std::max<Index>(0, seq.last_index() - changes);
}

GapProfile gap_profile(const RealSequence& seq, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("gap_profile: r must be positive");
    const IndexSet support = seq.support();
    const Index n = seq.last_index();

    GapProfile profile;
    profile.r = r;
    profile.expected_density =
        n > 0 ? static_cast<double>(support.counting(static_cast<double>(n)) - support.counting(0.0)) /
                    static_cast<double>(n)
              : 0.0;

    for (const Index m : support.elements()) {
        if (m == 0) continue;
        const double upper = (1.0 + r) * static_cast<double>(m);
        if (upper > static_cast<double>(n)) break;
        GapEntry e;
        e.m = m;
        e.count = support.counting(upper) - support.counting(static_cast<double>(m));
        e.ratio = static_cast<double>(e.count) / (r * static_cast<double>(m));
        e.gap_suspect = e.ratio < 0.5 * profile.expected_density;
        profile.entries.push_back(e);
    }
    return profile;
}

RegularityProfile regularity_profile(const RealSequence& seq, Index m_min) {
    if (m_min < 1) throw std::invalid_argument("regularity_profile: m_min must be >= 1");
    RegularityProfile profile;
    for (Index m = m_min; m <= seq.last_index(); ++m) {
        if (!seq.in_support(m)) continue;
        const double a = std::abs(seq.values()[static_cast<std::size_t>(m)]);
        const double root = std::exp(std::log(a) / static_cast<double>(m));
        profile.points.emplace_back(m, root);
        profile.max_deviation = std::max(profile.max_deviation, std::abs(root - 1.0));
    }
    profile.empty_tail = profile.points.empty();
    return profile;
}

}  // namespace fabry
