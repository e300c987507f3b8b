#include "fabry/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fabry/errors.hpp"

namespace fabry {

namespace {

// (1+r)x is formed in floating point; a product that should land exactly on
// the horizon may overshoot by a few ulps.
constexpr double kHorizonSlack = 1e-12;

}  // namespace

IndexSet::IndexSet(std::vector<Index> elements, Index horizon)
    : elements_(std::move(elements)), horizon_(horizon) {
    if (horizon_ < 0) throw std::invalid_argument("IndexSet: negative horizon");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const Index t = elements_[i];
        if (t < 0) throw std::invalid_argument("IndexSet: negative element " + std::to_string(t));
        if (t > horizon_) {
            throw std::invalid_argument("IndexSet: element " + std::to_string(t) +
                                        " exceeds horizon " + std::to_string(horizon_));
        }
        if (i > 0 && elements_[i - 1] >= t) {
            throw std::invalid_argument("IndexSet: elements not strictly increasing at " +
                                        std::to_string(t));
        }
    }
}

void IndexSet::check_horizon(double x) const {
    if (std::isnan(x)) throw std::invalid_argument("IndexSet: NaN query");
    const auto h = static_cast<double>(horizon_);
    if (x > h * (1.0 + kHorizonSlack) + kHorizonSlack) {
        throw HorizonExceeded("query x=" + std::to_string(x) + " beyond horizon " +
                              std::to_string(horizon_));
    }
}

bool IndexSet::contains(Index t) const {
    check_horizon(static_cast<double>(t));
    return std::binary_search(elements_.begin(), elements_.end(), t);
}

Index IndexSet::counting(double x) const {
    check_horizon(x);
    if (x < 0.0) return 0;
    const auto it = std::upper_bound(elements_.begin(), elements_.end(), x,
                                     [](double v, Index t) { return v < static_cast<double>(t); });
    return static_cast<Index>(it - elements_.begin());
}

Index IndexSet::count_below(double x) const {
    check_horizon(x);
    if (x <= 0.0) return 0;
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), x,
                                     [](Index t, double v) { return static_cast<double>(t) < v; });
    return static_cast<Index>(it - elements_.begin());
}

Index IndexSet::last_at_or_below(double x) const {
    const Index n = counting(x);
    return n == 0 ? -1 : elements_[static_cast<std::size_t>(n - 1)];
}

double IndexSet::window_density(double x, double r) const {
    if (!(x > 0.0) || !(r > 0.0)) {
        throw std::invalid_argument("window_density: requires x > 0 and r > 0");
    }
    const double upper = (1.0 + r) * x;
    const Index count = counting(upper) - counting(x);
    return static_cast<double>(count) / (r * x);
}

IndexSet IndexSet::complement() const {
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(horizon_));
    auto it = elements_.begin();
    for (Index t = 1; t <= horizon_; ++t) {
        while (it != elements_.end() && *it < t) ++it;
        if (it == elements_.end() || *it != t) out.push_back(t);
    }
    return IndexSet(std::move(out), horizon_);
}

IndexSet IndexSet::truncated(Index new_horizon) const {
    if (new_horizon > horizon_) {
        throw HorizonExceeded("cannot extend horizon " + std::to_string(horizon_) + " to " +
                              std::to_string(new_horizon));
    }
    std::vector<Index> out(elements_.begin(),
                           std::upper_bound(elements_.begin(), elements_.end(), new_horizon));
    return IndexSet(std::move(out), new_horizon);
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    if (a.horizon() != b.horizon()) throw std::invalid_argument("set_union: horizons differ");
    std::vector<Index> out;
    std::set_union(a.elements().begin(), a.elements().end(), b.elements().begin(),
                   b.elements().end(), std::back_inserter(out));
    return IndexSet(std::move(out), a.horizon());
}

}  // namespace fabry
