#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fabry/errors.hpp"
#include "fabry/series_builder.hpp"
#include "fabry/singularity.hpp"
#include "test_support.hpp"

using namespace fabry;
using std::numbers::pi;

namespace {

std::vector<Pole> points(std::initializer_list<Complex> zs) {
    std::vector<Pole> out;
    for (const Complex& z : zs) out.push_back(Pole{z, 1.0});
    return out;
}

}  // namespace

TEST_CASE("radius estimates") {
    std::vector<double> halves(201);
    for (std::size_t m = 0; m < halves.size(); ++m) halves[m] = std::ldexp(1.0, -static_cast<int>(m));
    CHECK(std::abs(radius_estimate(RealSequence(halves, 0.0)) - 2.0) <= 1e-3);

    std::vector<double> alternating(201);
    for (std::size_t m = 0; m < alternating.size(); ++m) alternating[m] = m % 2 == 0 ? 1.0 : -1.0;
    CHECK(radius_estimate(RealSequence(alternating)) == 1.0);

    const IndexSet evens = IndexSet::from_predicate(4000, [](Index t) { return t > 0 && t % 2 == 0; });
    CHECK(std::abs(radius_estimate(build_series(evens, 200).coefficients) - 1.0) <= 1e-3);

    std::vector<double> sparse(100, 0.0);
    for (std::size_t m = 0; m < 9; ++m) sparse[m * 11] = 1.0;
    CHECK_THROWS_AS(radius_estimate(RealSequence(sparse)), InsufficientData);
}

TEST_CASE("radius scales with c^m twisting") {
    std::mt19937_64 rng(43);
    const auto f = testing::random_rational(rng, 1, 1, 1);
    const auto a = f.series(300);
    const double base = radius_estimate(RealSequence(a, 0.0));
    for (const double c : {0.5, 0.9, 1.5}) {
        std::vector<double> twisted(a);
        for (std::size_t m = 0; m < a.size(); ++m) twisted[m] *= std::pow(c, static_cast<double>(m));
        CHECK(std::abs(radius_estimate(RealSequence(twisted, 0.0)) - base / c) <= 1e-3);
    }
}

TEST_CASE("arc clearance examples") {
    const auto pm_i = points({Complex(0, 1), Complex(0, -1)});
    const ArcClearance quarter = arc_clearance(pm_i, 0.25);
    CHECK(!quarter.on_arc);
    CHECK(quarter.margin == doctest::Approx(pi / 4));
    CHECK(quarter.clusters.size() == 2);

    for (const double delta : {0.0, 0.3, 0.9}) {
        const ArcClearance one = arc_clearance(points({Complex(1, 0)}), delta);
        CHECK(one.on_arc);
        CHECK(one.margin == doctest::Approx(-pi * delta));
    }

    const ArcClearance half = arc_clearance(pm_i, 0.5);
    CHECK(half.on_arc);
    CHECK(std::abs(half.margin) <= 1e-12);

    // poles well off the circle are ignored
    const ArcClearance far = arc_clearance(points({Complex(2.0, 0.0), Complex(0.5, 0.0)}), 0.5);
    CHECK(far.clusters.empty());
    CHECK(!far.on_arc);
    CHECK(std::isinf(far.margin));
    CHECK_THROWS_AS(arc_clearance(pm_i, 1.0), std::invalid_argument);
}

TEST_CASE("on_arc is monotone in delta") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> angle(-pi, pi), wobble(-0.04, 0.04);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Pole> ps;
        for (int i = 0; i < 4; ++i) ps.push_back(Pole{std::polar(1.0 + wobble(rng), angle(rng)), 1.0});
        bool previous = false;
        for (double delta = 0.0; delta < 1.0; delta += 0.01) {
            const bool on = arc_clearance(ps, delta).on_arc;
            CHECK((!previous || on));
            previous = on;
        }
    }
}

TEST_CASE("clusters merge nearby angles, including across theta = pi") {
    const auto ps = points({std::polar(1.0, pi - 0.01), std::polar(1.0, -pi + 0.01), std::polar(1.0, 0.5),
                            std::polar(1.0, 0.52), std::polar(1.0, 0.54)});
    const auto clusters = unit_circle_clusters(ps);
    REQUIRE(clusters.size() == 2);
    const auto& straddle = std::abs(clusters[0].angle) > 3.0 ? clusters[0] : clusters[1];
    const auto& triple = std::abs(clusters[0].angle) > 3.0 ? clusters[1] : clusters[0];
    CHECK(straddle.count == 2);
    CHECK(std::abs(std::abs(straddle.angle) - pi) <= 1e-12);
    CHECK(triple.count == 3);
    CHECK(triple.angle == doctest::Approx(0.52));
    CHECK(triple.nearest_abs_angle == doctest::Approx(0.5));
}

TEST_CASE("probe of 1/(1-z) and of the evens construction") {
    const RealSequence geometric(std::vector<double>(101, 1.0));
    const double deltas[] = {0.9, 0.0};
    const SingularityReport g = probe(geometric, deltas);
    REQUIRE(g.radius);
    CHECK(*g.radius == 1.0);
    REQUIRE(g.poles.size() == 1);
    CHECK(std::abs(g.poles[0].z - Complex(1.0, 0.0)) <= 1e-10);
    CHECK(g.arcs[0].on_arc);
    CHECK(g.arcs[1].on_arc);
    CHECK(g.numerical_evidence_only);

    const IndexSet evens = IndexSet::from_predicate(4000, [](Index t) { return t > 0 && t % 2 == 0; });
    const double d4[] = {0.4};
    const SingularityReport e = probe(build_series(evens, 200).coefficients, d4);
    CHECK(e.approximant.L == 99);
    CHECK(e.approximant.effective_M == 2);
    CHECK(!e.arcs[0].on_arc);
    CHECK(e.arcs[0].margin == doctest::Approx(0.1 * pi).epsilon(1e-6));
}

TEST_CASE("rotation rotates the detected poles") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = testing::random_rational(rng, 1, 1, 1);
        const auto a = f.series(40);
        const Complex lambda = std::polar(1.0, angle(rng));
        std::vector<Complex> twisted(a.size());
        Complex power = 1.0;
        for (std::size_t m = 0; m < a.size(); ++m, power *= lambda) twisted[m] = power * a[m];
        const auto base = poles(pade(std::span<const double>(a), 1, 3));
        const auto rotated = poles(pade(std::span<const Complex>(twisted), 1, 3));
        REQUIRE(base.size() == rotated.size());
        for (const Pole& p : base) {
            double best = 1e300;
            for (const Pole& q : rotated) best = std::min(best, std::abs(q.z - p.z * std::conj(lambda)));
            CHECK(best <= 1e-6);
        }
    }
}
