#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fabry/index_set.hpp"

namespace fabry::testing {

/// ∪_k [4^k, 2·4^k) ∩ [0, horizon].
inline IndexSet block_set(Index horizon) {
    return IndexSet::from_predicate(horizon, [](Index t) {
        for (Index lo = 1; lo <= t; lo *= 4) {
            if (t >= lo && t < 2 * lo) return true;
        }
        return false;
    });
}

/// {t in [0, horizon] : t mod period is one of residues}.
inline IndexSet periodic_set(Index horizon, Index period, const std::vector<Index>& residues) {
    std::vector<bool> keep(static_cast<std::size_t>(period), false);
    for (const Index r : residues) keep[static_cast<std::size_t>(r % period)] = true;
    return IndexSet::from_predicate(horizon, [&](Index t) { return keep[static_cast<std::size_t>(t % period)]; });
}

inline IndexSet random_set(std::mt19937_64& rng, Index horizon, double p) {
    std::bernoulli_distribution coin(p);
    return IndexSet::from_predicate(horizon, [&](Index) { return coin(rng); });
}

}  // namespace fabry::testing

#include <complex>
#include <numbers>

namespace fabry::testing {

/// A real rational function N/D with D(0) = 1, given by its poles.
struct RandomRational {
    std::vector<double> numerator;
    std::vector<double> denominator;
    std::vector<std::complex<double>> poles;

    /// Taylor coefficients a_0..a_n by long division.
    std::vector<double> series(std::size_t n) const {
        std::vector<double> a(n + 1, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            double v = k < numerator.size() ? numerator[k] : 0.0;
            for (std::size_t j = 1; j < denominator.size() && j <= k; ++j) v -= denominator[j] * a[k - j];
            a[k] = v;
        }
        return a;
    }
};

/// Poles with modulus in [r_lo, r_hi]: `pairs` conjugate pairs plus `reals`
/// real poles; numerator of degree `p` with N(0) = 1.
inline RandomRational random_rational(std::mt19937_64& rng, int p, int pairs, int reals, double r_lo = 1.2,
                                      double r_hi = 3.0) {
    std::uniform_real_distribution<double> modulus(r_lo, r_hi), angle(0.2, std::numbers::pi - 0.2), coef(-1.0, 1.0);
    RandomRational f;
    std::vector<std::complex<double>> den{1.0};
    auto multiply = [&den](std::complex<double> root) {
        // den *= (1 - z / root)
        std::vector<std::complex<double>> next(den.size() + 1, 0.0);
        for (std::size_t i = 0; i < den.size(); ++i) {
            next[i] += den[i];
            next[i + 1] -= den[i] / root;
        }
        den = next;
    };
    for (int i = 0; i < pairs; ++i) {
        const auto z = std::polar(modulus(rng), angle(rng));
        f.poles.push_back(z);
        f.poles.push_back(std::conj(z));
        multiply(z);
        multiply(std::conj(z));
    }
    for (int i = 0; i < reals; ++i) {
        const double z = (rng() % 2 ? 1.0 : -1.0) * modulus(rng);
        f.poles.emplace_back(z, 0.0);
        multiply(z);
    }
    for (const auto& c : den) f.denominator.push_back(c.real());
    f.numerator.push_back(1.0);
    for (int i = 0; i < p; ++i) f.numerator.push_back(coef(rng));
    return f;
}

}  // namespace fabry::testing
