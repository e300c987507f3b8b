#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fabry/errors.hpp"
#include "fabry/series_builder.hpp"
#include "test_support.hpp"

using namespace fabry;

namespace {

IndexSet positive_evens(Index horizon) {
    return IndexSet::from_predicate(horizon, [](Index t) { return t > 0 && t % 2 == 0; });
}

}  // namespace

TEST_CASE("evens give the series of 1/(1+z^2)") {
    const ConstructionReport report = build_series(positive_evens(1000), 12);
    const auto& a = report.coefficients.values();
    REQUIRE(a.size() == 13);
    for (Index m = 0; m <= 12; ++m) {
        const auto i = static_cast<std::size_t>(m);
        if (m % 2 == 1) {
            CHECK(a[i] == 0.0);
        } else {
            CHECK(std::abs(a[i] - ((m / 2) % 2 == 0 ? 1.0 : -1.0)) <= 1e-6);
        }
    }
    // (1 + z^2) * sum a_m z^m = 1 + O(z^13)
    for (Index k = 1; k <= 12; ++k) {
        const double c = a[static_cast<std::size_t>(k)] + (k >= 2 ? a[static_cast<std::size_t>(k - 2)] : 0.0);
        CHECK(std::abs(c) <= 1e-6);
    }
    CHECK(report.delta_prime == 0.5);
    CHECK(report.product.tail_density == 0.5);
    CHECK(report.predicted_clear_arc_halfangle == doctest::Approx(std::numbers::pi / 2));
    for (const auto& [name, ok] : report.checks) CHECK_MESSAGE(ok, name);
}

TEST_CASE("full and empty Λ'") {
    const IndexSet full = IndexSet::from_predicate(400, [](Index) { return true; });
    const ConstructionReport geometric = build_series(full, 20);
    for (Index m = 0; m <= 20; ++m) {
        CHECK(geometric.coefficients.values()[static_cast<std::size_t>(m)] == (m % 2 == 0 ? 1.0 : -1.0));
    }
    CHECK(geometric.delta_prime == 1.0);

    const ConstructionReport trivial = build_series(IndexSet({}, 400), 20);
    CHECK(trivial.coefficients.values()[0] == 1.0);
    for (Index m = 1; m <= 20; ++m) CHECK(trivial.coefficients.values()[static_cast<std::size_t>(m)] == 0.0);
    CHECK(trivial.sign_changes.empty());
}

TEST_CASE("horizon must support truncation 20N") {
    CHECK_THROWS_AS(build_series(positive_evens(399), 20), TruncationInsufficient);
    CHECK_THROWS_AS(build_series(positive_evens(10), 20), HorizonExceeded);
}

TEST_CASE("support is exactly Λ' and signs follow the parity argument") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const Index n = 50 + static_cast<Index>(rng() % 451);
        const IndexSet lambda_prime = testing::random_set(rng, 20 * n, 0.15 + 0.06 * trial);
        const ConstructionReport report = build_series(lambda_prime, n);
        const IndexSet zeros = report.product.zeros;
        const IndexSet support = report.coefficients.support();

        for (Index m = 0; m <= n; ++m) {
            CHECK(support.contains(m) == (m == 0 || lambda_prime.contains(m)));
        }
        CHECK(report.checks.at("support_exact"));

        // Consecutive support points p < q change sign iff (q - p) + #(S ∩ (p, q)) is odd.
        const auto points = support.elements();
        for (std::size_t i = 1; i < points.size(); ++i) {
            const Index p = points[i - 1], q = points[i];
            const Index between = zeros.count_below(static_cast<double>(q)) - zeros.counting(static_cast<double>(p));
            CHECK(report.sign_changes.contains(q) == ((q - p + between) % 2 == 1));
        }

        // The zeros of F on [0, N] are exactly S ∩ [0, N]; the lower bound is attained.
        const Index zeros_on_interval = zeros.counting(static_cast<double>(n));
        CHECK(zero_count_lower_bound(report.coefficients) <= zeros_on_interval);
        CHECK(zero_count_lower_bound(report.coefficients) == zeros_on_interval);
    }
}

TEST_CASE("regularity of periodic constructions") {
    for (const auto& residues : {std::vector<Index>{0}, std::vector<Index>{1}, std::vector<Index>{1, 2}, std::vector<Index>{0, 3}}) {
        const IndexSet lambda_prime = testing::periodic_set(8000, 4, residues);
        const ConstructionReport report = build_series(lambda_prime, 400);
        CHECK(report.regularity_deviation <= 0.05);
        const RegularityProfile early = regularity_profile(report.coefficients, 50);
        CHECK(report.regularity_deviation <= early.max_deviation);
    }
}

TEST_CASE("theorem 1 hypothesis verdicts") {
    const IndexSet evens = positive_evens(4000);
    const ConstructionReport report = build_series(evens, 200);

    const Theorem1Hypotheses same = verify_theorem1_hypotheses(report, evens, 0.4);
    CHECK(same.sign_changes_in_lambda == Verdict::pass);
    CHECK(same.regularity == Verdict::pass);
    CHECK(same.radius_one == Verdict::pass);
    CHECK(same.radius == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(same.density_exceeds_delta == Verdict::pass);

    const IndexSet odds = IndexSet::from_predicate(4000, [](Index t) { return t % 2 == 1; });
    CHECK(verify_theorem1_hypotheses(report, odds, 0.4).sign_changes_in_lambda == Verdict::fail);
    CHECK(verify_theorem1_hypotheses(report, evens, 0.6).density_exceeds_delta == Verdict::fail);

    const IndexSet full = IndexSet::from_predicate(4000, [](Index) { return true; });
    const Theorem1Hypotheses geometric = verify_theorem1_hypotheses(build_series(full, 200), full, 0.9);
    CHECK(geometric.sign_changes_in_lambda == Verdict::pass);
    CHECK(geometric.regularity == Verdict::pass);
    CHECK(geometric.radius_one == Verdict::pass);
    CHECK(geometric.density_exceeds_delta == Verdict::pass);

    // a set whose n(x)/x does not settle gives no density verdict
    const IndexSet block = testing::block_set(65536);
    const Theorem1Hypotheses oscillating = verify_theorem1_hypotheses(build_series(block, 100), block, 0.3);
    CHECK(oscillating.density_exceeds_delta == Verdict::inconclusive);
}

TEST_CASE("closed form for a period-3 construction") {
    // Λ' = {t ≡ 1 mod 3}: F(z) = sinc(z/3) Γ(2/3)^2 / (Γ(2/3 - z/3) Γ(2/3 + z/3)),
    // so a_100 = F(100) = 0.00129886699990376709 (30-digit reference).
    const ConstructionReport report = build_series(testing::periodic_set(40000, 3, {1}), 2000);
    const double a100 = report.coefficients.values()[100];
    // The tail model is accurate to about rho m^2 / T^2 ~ 4e-6 in log|F|.
    CHECK(a100 == doctest::Approx(0.00129886699990376709).epsilon(1e-5));
    // |a_100|^(1/100) is 0.064 below 1: the coefficients approach radius one slowly.
    CHECK(std::pow(a100, 0.01) - 1.0 == doctest::Approx(-0.0643021171408116697).epsilon(1e-5));
}
