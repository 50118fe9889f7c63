#include <doctest.h>

#include <cmath>

#include "tda/io.hpp"
#include "tda/mapper.hpp"

#include "test_support.hpp"

using namespace tda;

TEST_CASE("gap threshold heuristic") {
    CHECK(gap_threshold({0.1, 0.1, 5.0}, 10) == doctest::Approx(0.5));
    CHECK(gap_threshold({}, 10) == infinity);
    CHECK(gap_threshold({1.0, 1.0, 1.0}, 1) == infinity);
    // equal heights have no gap above them: a single cluster
    CHECK(gap_threshold({1.0, 1.0}, 4) == infinity);
    CHECK(gap_threshold({0.0, 0.0}, 4) == infinity);
    // leading empty bins are not gaps; the gap sits above the low range
    CHECK(gap_threshold({0.39, 0.39, 2.0}, 10) == doctest::Approx(0.4));
    CHECK_THROWS_AS(gap_threshold({1.0}, 0), tda_error);
}

TEST_CASE("interval cover geometry") {
    interval_cover c;
    c.n_intervals = 4;
    c.overlap = 0.5;
    c.f_min = 0.0;
    c.f_max = 1.0;
    c.validate();
    auto first = c.block(0);
    auto second = c.block(1);
    CHECK(first.first == doctest::Approx(0.0));
    // consecutive blocks overlap by half a block length
    CHECK(second.first == doctest::Approx(first.first + 0.5 * (first.second - first.first)));
    CHECK(c.block(3).second == doctest::Approx(1.0));

    interval_cover bad = c;
    bad.overlap = 1.0;
    CHECK_THROWS_AS(bad.validate(), tda_error);
}

TEST_CASE("two far clumps with a constant filter become two nodes") {
    point_cloud pc;
    pc.points = {{0, 0}, {0.1, 0}, {0, 0.1}, {10, 10}, {10.1, 10}, {10, 10.1}};
    auto x = euclidean_metric(pc);
    interval_cover c;
    c.n_intervals = 1;
    c.overlap = 0.0;
    c.f_min = 0.0;
    c.f_max = 0.0;
    auto g = mapper(x, std::vector<double>(6, 0.0), c, 2, 10);
    CHECK(g.nodes.size() == 2);
    CHECK(g.edges().empty());
}

TEST_CASE("mapper on a circle recovers a cycle deterministically") {
    point_cloud pc;
    std::vector<double> filter;
    for (int k = 0; k < 16; ++k) {
        double t = 2.0 * 3.14159265358979323846 * k / 16;
        pc.points.push_back({std::cos(t), std::sin(t)});
        filter.push_back(std::cos(t)); // x-coordinate
    }
    auto x = euclidean_metric(pc);
    interval_cover c;
    c.n_intervals = 4;
    c.overlap = 0.5;
    c.f_min = -1.0;
    c.f_max = 1.0;
    auto g = mapper(x, filter, c, 2, 10);
    CHECK(g.graph_betti_1() == 1);

    // deterministic: identical inputs give identical serialized output
    auto again = mapper(x, filter, c, 2, 10);
    CHECK(write_mapper_json(g) == write_mapper_json(again));

    // 1-d cover with <= 1/2 overlap: no 2-simplices in the nerve
    for (const auto& e : g.nerve_complex.entries()) CHECK(e.vertices.size() <= 2);
}

TEST_CASE("single point input") {
    finite_metric_space one(1, {0.0});
    interval_cover c;
    c.n_intervals = 1;
    c.overlap = 0.0;
    auto g = mapper(one, {0.0}, c, 2, 10);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges().empty());
}

TEST_CASE("membership and interval consistency") {
    tda_test::rng r(50);
    auto pc = tda_test::random_cloud(r, 20, 2);
    auto x = euclidean_metric(pc);
    std::vector<double> filter;
    for (const auto& p : pc.points) filter.push_back(p[0]);
    interval_cover c;
    c.n_intervals = 5;
    c.overlap = 0.3;
    c.f_min = filter[0];
    c.f_max = filter[0];
    for (double f : filter) {
        c.f_min = std::min(c.f_min, f);
        c.f_max = std::max(c.f_max, f);
    }
    auto g = mapper(x, filter, c, 2, 10);

    std::vector<bool> seen(20, false);
    for (const auto& node : g.nodes) {
        auto [lo, hi] = c.block(node.interval_index);
        for (int v : node.members) {
            seen[v] = true;
            CHECK(filter[v] >= lo - 1e-12);
            CHECK(filter[v] <= hi + 1e-12);
        }
    }
    for (bool s : seen) CHECK(s);

    // the node member sets cover the ground set
    cover node_cover;
    node_cover.ground_size = 20;
    for (const auto& node : g.nodes) node_cover.blocks.push_back(node.members);
    CHECK(node_cover.covers_ground());

    CHECK_THROWS_AS(mapper(x, {1.0}, c, 2, 10), tda_error);
}
