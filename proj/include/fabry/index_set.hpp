#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fabry {

using Index = std::int64_t;

/// A finite, strictly increasing set of non-negative integers together with
/// the horizon up to which membership is known. Queries past the horizon
/// throw HorizonExceeded instead of extrapolating.
class IndexSet {
public:
    IndexSet() = default;

    /// Validates that `elements` is strictly increasing, non-negative and
    /// bounded by `horizon`; throws std::invalid_argument otherwise.
    IndexSet(std::vector<Index> elements, Index horizon);

    /// {t in [0, horizon] : pred(t)}.
    template <class Pred>
    static IndexSet from_predicate(Index horizon, Pred pred) {
        std::vector<Index> out;
        for (Index t = 0; t <= horizon; ++t) {
            if (pred(t)) out.push_back(t);
        }
        return IndexSet(std::move(out), horizon);
    }

    std::span<const Index> elements() const noexcept { return elements_; }
    Index horizon() const noexcept { return horizon_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    bool contains(Index t) const;

    /// n(x) = #{t : t <= x}. Real x is compared exactly against the integers.
    Index counting(double x) const;

    /// #{t : t < x}.
    Index count_below(double x) const;

    /// Largest element <= x, or -1 if none.
    Index last_at_or_below(double x) const;

    /// (n((1+r)x) - n(x)) / (r x).
    double window_density(double x, double r) const;

    /// {1..horizon} \ elements. Zero is never part of the complement.
    IndexSet complement() const;

    /// The same elements restricted to [0, new_horizon].
    IndexSet truncated(Index new_horizon) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    void check_horizon(double x) const;

    std::vector<Index> elements_;
    Index horizon_ = 0;
};

/// Disjoint union of two sets on the same horizon.
IndexSet set_union(const IndexSet& a, const IndexSet& b);

}  // namespace fabry
