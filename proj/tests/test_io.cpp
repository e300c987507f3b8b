#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fabry/errors.hpp"
#include "fabry/io.hpp"
#include "test_support.hpp"

using namespace fabry;

TEST_CASE("index set files") {
    std::istringstream in("# horizon=10\n1\n3\n\n7\n");
    const IndexSet s = io::read_index_set(in);
    CHECK(s == IndexSet({1, 3, 7}, 10));

    std::ostringstream out;
    io::write_index_set(out, s);
    CHECK(out.str() == "# horizon=10\n1\n3\n7\n");
}

TEST_CASE("index set parse errors name the line") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            io::read_index_set(in, "set");
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("# horizon=10\n1\n1\n") == 3);
    CHECK(line_of("# horizon=10\n1\nx\n") == 3);
    CHECK(line_of("# horizon=10\n11\n") == 2);
    CHECK(line_of("3\n") == 1);
    CHECK(line_of("# horizon=10\n# colour=blue\n") == 2);
    std::istringstream missing("1\n");
    CHECK_THROWS_AS(io::read_index_set(missing), ParseError);
}

TEST_CASE("product spec files") {
    std::istringstream in("# horizon=9\n# tail_density=0.5\n1\n3\n5\n7\n9\n");
    const ProductSpec spec = io::read_product_spec(in);
    CHECK(spec.truncation == 9);
    CHECK(spec.tail_density == 0.5);
    CHECK(spec.zeros.size() == 5);

    std::ostringstream out;
    io::write_product_spec(out, spec);
    std::istringstream again(out.str());
    const ProductSpec back = io::read_product_spec(again);
    CHECK(back.zeros == spec.zeros);
    CHECK(back.tail_density == spec.tail_density);
    CHECK(back.truncation == spec.truncation);

    std::istringstream no_density("# horizon=9\n1\n");
    CHECK_THROWS_AS(io::read_product_spec(no_density), ParseError);
    std::istringstream zero_zero("# horizon=9\n# tail_density=0.5\n0\n");
    CHECK_THROWS_AS(io::read_product_spec(zero_zero), ParseError);
}

TEST_CASE("coefficient CSV") {
    std::istringstream in("m,a_m\n0,1\n1,-2.5e-3\n2,0\n");
    const RealSequence seq = io::read_real_sequence(in);
    CHECK(seq.values() == std::vector<double>{1.0, -2.5e-3, 0.0});

    std::istringstream gap("0,1\n2,1\n");
    try {
        io::read_real_sequence(gap, "gap.csv");
        FAIL("missing row accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("gap.csv:2") == 0);
    }
    std::istringstream bad("0,1\n1,abc\n");
    CHECK_THROWS_AS(io::read_real_sequence(bad), ParseError);
    std::istringstream empty("m,a_m\n");
    CHECK_THROWS_AS(io::read_real_sequence(empty), ParseError);
}

TEST_CASE("coefficient CSV round-trips bit for bit") {
    std::mt19937_64 rng(59);
    std::normal_distribution<double> value(0.0, 1e3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a(1 + rng() % 50);
        for (double& v : a) v = rng() % 4 == 0 ? 0.0 : value(rng) * std::pow(10.0, static_cast<double>(rng() % 40) - 20.0);
        std::ostringstream out;
        io::write_real_sequence(out, RealSequence(a));
        std::istringstream in(out.str());
        CHECK(io::read_real_sequence(in).values() == a);
    }
}

TEST_CASE("report keys") {
    const IndexSet evens = testing::periodic_set(1000, 2, {0});
    const auto curve = io::to_json(density_curve(evens, {0.5, 0.1}, 300.0));
    for (const char* key : {"r", "inf_window", "sup_window", "min_estimate", "max_estimate"}) CHECK(curve.contains(key));

    const ProductSpec spec = make_product_spec(testing::periodic_set(1000, 2, {1}), 0.5, 1000);
    const auto sample = io::to_json(indicator_estimate(spec, 1.0, 40.0));
    for (const char* key : {"theta", "t", "value", "estimate"}) CHECK(sample.contains(key));

    std::vector<double> a(41, 1.0);
    const double deltas[] = {0.5};
    const auto report = io::to_json(probe(RealSequence(a), deltas));
    for (const char* key : {"radius", "poles", "clusters", "on_arc", "margin"}) CHECK(report.contains(key));
    CHECK(report["poles"][0].contains("re"));
    CHECK(report["poles"][0].contains("im"));
    CHECK(report["poles"][0].contains("weight"));
}
