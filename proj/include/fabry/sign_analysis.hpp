#pragma once

#include <utility>
#include <vector>

#include "fabry/index_set.hpp"

namespace fabry {

inline constexpr double kDefaultSupportTolerance = 1e-10;

/// Coefficients a_0..a_N of a real power series. A coefficient belongs to the
/// support iff |a_m| > tolerance * max_k |a_k|.
class RealSequence {
public:
    RealSequence() = default;
    explicit RealSequence(std::vector<double> values,
                          double support_tolerance = kDefaultSupportTolerance);

    const std::vector<double>& values() const noexcept { return values_; }
    double support_tolerance() const noexcept { return tolerance_; }
    /// Last index N. Requires a non-empty sequence.
    Index last_index() const noexcept { return static_cast<Index>(values_.size()) - 1; }
    double max_abs() const noexcept { return max_abs_; }

    bool in_support(Index m) const;
    /// Support as an IndexSet with horizon N.
    IndexSet support() const;

private:
    std::vector<double> values_;
    double tolerance_ = kDefaultSupportTolerance;
    double max_abs_ = 0.0;
};

/// Places m where a_m has the opposite sign to the previous support point.
/// The first support point is never a sign change.
IndexSet sign_change_set(const RealSequence& seq);

/// max(0, N - #sign changes): a lower bound on the zeros in [0, N] of any real
/// analytic f with f(n) = (-1)^n a_n.
Index zero_count_lower_bound(const RealSequence& seq);

struct GapEntry {
    Index m = 0;
    Index count = 0;     // support points in (m, (1+r)m]
    double ratio = 0.0;  // count / (r m)
    bool gap_suspect = false;
};

struct GapProfile {
    double r = 0.0;
    double expected_density = 0.0;  // |support ∩ [1, N]| / N
    std::vector<GapEntry> entries;
};

/// For every support point m >= 1 with (1+r)m <= N: the number of support
/// points in (m, (1+r)m]. Entries whose ratio is below half the overall
/// support density are flagged as sparse windows.
GapProfile gap_profile(const RealSequence& seq, double r);

struct RegularityProfile {
    std::vector<std::pair<Index, double>> points;  // (m, |a_m|^{1/m})
    double max_deviation = 0.0;                    // max | |a_m|^{1/m} - 1 |
    bool empty_tail = false;
};

RegularityProfile regularity_profile(const RealSequence& seq, Index m_min = 1);

}  // namespace fabry
