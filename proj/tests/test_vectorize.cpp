#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "tda/vectorize.hpp"

#include "test_support.hpp"

using namespace tda;

namespace {

double tent_value(const interval& iv, double t) {
    return std::max(std::min(t - iv.birth, iv.death - t), 0.0);
}

// pointwise k-th max over a dense grid
double grid_kth(const diagram& d, int k, double t) {
    std::vector<double> vals;
    for (const auto& iv : d) vals.push_back(tent_value(iv, t));
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    if (k > static_cast<int>(vals.size())) return 0.0;
    return vals[k - 1];
}

diagram random_diagram(tda_test::rng& r, int max_points) {
    diagram d;
    int n = r.uniform_int(0, max_points);
    for (int i = 0; i < n; ++i) {
        double birth = r.uniform(0.0, 2.0);
        d.push_back({birth, birth + r.uniform(0.05, 2.0)});
    }
    return d;
}

// 2-d Simpson quadrature of the weighted Gaussian surface over a rectangle
double simpson_pixel(const diagram& d, const image_config& cfg, double x0, double x1, double e0,
                     double e1, int steps) {
    auto surface = [&](double x, double e) {
        double acc = 0.0;
        for (const auto& iv : d) {
            double xi = iv.birth, eta = iv.death - iv.birth;
            double w = cfg.weight_at(eta);
            double gx = std::exp(-0.5 * (x - xi) * (x - xi) / (cfg.sigma * cfg.sigma));
            double ge = std::exp(-0.5 * (e - eta) * (e - eta) / (cfg.sigma * cfg.sigma));
            acc += w * gx * ge / (2.0 * 3.14159265358979323846 * cfg.sigma * cfg.sigma);
        }
        return acc;
    };
    // Simpson weights in both axes; steps must be even
    double hx = (x1 - x0) / steps, he = (e1 - e0) / steps;
    double total = 0.0;
    for (int i = 0; i <= steps; ++i) {
        double wi = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        for (int j = 0; j <= steps; ++j) {
            double wj = (j == 0 || j == steps) ? 1.0 : (j % 2 ? 4.0 : 2.0);
            total += wi * wj * surface(x0 + i * hx, e0 + j * he);
        }
    }
    return total * hx * he / 9.0;
}

} // namespace

TEST_CASE("algebraic features on simple diagrams") {
    auto f = algebraic_features({{1, 3}}, {{1, 0}, {1, 1}, {2, 1}});
    CHECK(f.value_of("x_1_0") == doctest::Approx(2.0));
    CHECK(f.value_of("x_1_1") == doctest::Approx(8.0));
    CHECK(f.value_of("x_2_1") == doctest::Approx(16.0));

    auto empty = algebraic_features({}, {{1, 0}});
    CHECK(empty.value_of("x_1_0") == 0.0);

    CHECK_THROWS_AS(algebraic_features({{1, 3}}, {{0, 1}}), tda_error);
    CHECK_THROWS_AS(algebraic_features({{1, infinity}}, {{1, 0}}), tda_error);
}

TEST_CASE("algebraic features ignore zero-length padding and ordering") {
    tda_test::rng r(30);
    std::vector<std::pair<int, int>> indices;
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) indices.emplace_back(i, j);
    for (int trial = 0; trial < 20; ++trial) {
        diagram d = random_diagram(r, 5);
        auto base = algebraic_features(d, indices);

        diagram padded = d;
        padded.push_back({0.7, 0.7});
        padded.push_back({1.3, 1.3});
        auto with_pad = algebraic_features(padded, indices);

        diagram shuffled = d;
        std::shuffle(shuffled.begin(), shuffled.end(), r.engine);
        auto with_perm = algebraic_features(shuffled, indices);

        for (size_t k = 0; k < base.items.size(); ++k) {
            CHECK(base.items[k].second == with_pad.items[k].second);
            CHECK(base.items[k].second == with_perm.items[k].second);
        }
    }
}

TEST_CASE("algebraic features separate distinct small diagrams") {
    tda_test::rng r(31);
    std::vector<std::pair<int, int>> indices;
    for (int i = 1; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) indices.emplace_back(i, j);
    int distinct_checked = 0;
    while (distinct_checked < 100) {
        diagram a = canonicalize(random_diagram(r, 4));
        diagram b = canonicalize(random_diagram(r, 4));
        if (a == b) continue;
        ++distinct_checked;
        auto fa = algebraic_features(a, indices);
        auto fb = algebraic_features(b, indices);
        bool differ = false;
        for (size_t k = 0; k < fa.items.size(); ++k)
            if (std::abs(fa.items[k].second - fb.items[k].second) > 1e-9) differ = true;
        REQUIRE(differ);
    }
}

TEST_CASE("landscape exact values on known diagrams") {
    auto l1 = build_landscape({{0, 2}}, 3);
    CHECK(landscape_eval(l1, 1, 1.0) == doctest::Approx(1.0));
    CHECK(landscape_eval(l1, 1, 0.0) == 0.0);
    CHECK(landscape_eval(l1, 2, 1.0) == 0.0);
    CHECK(l1.level_count() == 1);

    auto l2 = build_landscape({{0, 2}, {0, 2}}, 3);
    for (double t : {0.2, 0.9, 1.6})
        CHECK(landscape_eval(l2, 2, t) == doctest::Approx(landscape_eval(l2, 1, t)));

    auto l3 = build_landscape({{0, 4}, {1, 3}}, 3);
    CHECK(landscape_eval(l3, 1, 2.0) == doctest::Approx(2.0));
    CHECK(landscape_eval(l3, 2, 2.0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(build_landscape({{0, 2}}, 0), tda_error);
    CHECK_THROWS_AS(landscape_eval(l1, 0, 1.0), tda_error);
}

TEST_CASE("landscape axioms and grid-oracle agreement on random diagrams") {
    tda_test::rng r(32);
    for (int trial = 0; trial < 25; ++trial) {
        diagram d = canonicalize(random_diagram(r, 6));
        int k_max = 7;
        auto l = build_landscape(d, k_max);
        CHECK(l.level_count() <= static_cast<int>(d.size()));
        for (int probe = 0; probe < 60; ++probe) {
            double t = r.uniform(-0.5, 4.5);
            double prev = infinity;
            for (int k = 1; k <= k_max; ++k) {
                double v = landscape_eval(l, k, t);
                REQUIRE(v >= 0.0);
                REQUIRE(v <= prev + 1e-12);
                REQUIRE(v == doctest::Approx(grid_kth(d, k, t)).epsilon(1e-9));
                prev = v;
            }
            // vanishing beyond the diagram size
            REQUIRE(landscape_eval(l, static_cast<int>(d.size()) + 1, t) == 0.0);
        }
        // 1-Lipschitz in t
        for (int probe = 0; probe < 40; ++probe) {
            double t1 = r.uniform(-0.5, 4.5), t2 = r.uniform(-0.5, 4.5);
            for (int k = 1; k <= 3; ++k)
                REQUIRE(std::abs(landscape_eval(l, k, t1) - landscape_eval(l, k, t2)) <=
                        std::abs(t1 - t2) + 1e-12);
        }
    }
}

TEST_CASE("landscape segments have slopes in {-1, 0, +1}") {
    tda_test::rng r(37);
    for (int trial = 0; trial < 10; ++trial) {
        auto l = build_landscape(canonicalize(random_diagram(r, 6)), 5);
        for (const auto& level : l.levels)
            for (size_t i = 0; i + 1 < level.size(); ++i) {
                double h = level[i + 1].t - level[i].t;
                REQUIRE(h > 0);
                double slope = (level[i + 1].v - level[i].v) / h;
                bool legal = std::abs(slope) < 1e-9 || std::abs(slope - 1.0) < 1e-9 ||
                             std::abs(slope + 1.0) < 1e-9;
                REQUIRE(legal);
            }
    }
}

TEST_CASE("landscape critical points evaluate to themselves") {
    tda_test::rng r(33);
    diagram d = canonicalize(random_diagram(r, 5));
    auto l = build_landscape(d, 4);
    for (int k = 1; k <= l.level_count(); ++k)
        for (const auto& pt : l.levels[k - 1])
            CHECK(landscape_eval(l, k, pt.t) == doctest::Approx(pt.v));
}

TEST_CASE("landscape distances") {
    auto la = build_landscape({{0, 2}}, 2);
    landscape empty;
    CHECK(landscape_distance(la, la, infinity) == 0.0);
    CHECK(landscape_distance(la, la, 1.0) == 0.0);
    CHECK(landscape_distance(la, empty, infinity) == doctest::Approx(1.0));
    CHECK(landscape_distance(la, empty, 1.0) == doctest::Approx(1.0));
    CHECK(landscape_distance(la, empty, 2.0) == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK_THROWS_AS(landscape_distance(la, empty, 3.0), tda_error);

    // numeric cross-check of the piecewise integration
    tda_test::rng r(34);
    for (int trial = 0; trial < 10; ++trial) {
        auto l1 = build_landscape(canonicalize(random_diagram(r, 4)), 3);
        auto l2 = build_landscape(canonicalize(random_diagram(r, 4)), 3);
        double exact1 = landscape_distance(l1, l2, 1.0);
        double exact2 = landscape_distance(l1, l2, 2.0);
        double quad1 = 0.0, quad2 = 0.0;
        int steps = 60000;
        double lo = -1.0, hi = 5.0, h = (hi - lo) / steps;
        for (int k = 1; k <= 3; ++k)
            for (int i = 0; i < steps; ++i) {
                double t = lo + (i + 0.5) * h;
                double diff = landscape_eval(l1, k, t) - landscape_eval(l2, k, t);
                quad1 += std::abs(diff) * h;
                quad2 += diff * diff * h;
            }
        CHECK(exact1 == doctest::Approx(quad1).epsilon(1e-4));
        CHECK(exact2 == doctest::Approx(std::sqrt(quad2)).epsilon(1e-4));
    }
}

TEST_CASE("landscape stability against the bottleneck distance") {
    tda_test::rng r(35);
    for (int trial = 0; trial < 30; ++trial) {
        diagram a = canonicalize(random_diagram(r, 5));
        diagram b = canonicalize(random_diagram(r, 5));
        double w_inf = bottleneck(a, b);
        auto la = build_landscape(a, 5);
        auto lb = build_landscape(b, 5);
        for (int probe = 0; probe < 40; ++probe) {
            double t = r.uniform(-0.5, 4.5);
            for (int k = 1; k <= 5; ++k)
                REQUIRE(std::abs(landscape_eval(la, k, t) - landscape_eval(lb, k, t)) <=
                        w_inf + 1e-9);
        }
    }
}

TEST_CASE("persistence image basics") {
    image_config cfg;
    cfg.xi_min = 0;
    cfg.xi_max = 2;
    cfg.eta_min = 0;
    cfg.eta_max = 2;
    cfg.n_xi = 4;
    cfg.n_eta = 4;
    cfg.sigma = 0.1;

    auto zero = persistence_image({}, cfg);
    CHECK(zero.items.size() == 16);
    CHECK(zero.sum() == 0.0);

    // a diagonal point has weight zero
    auto diag = persistence_image({{1.0, 1.0}}, cfg);
    CHECK(diag.sum() == 0.0);

    image_config bad = cfg;
    bad.sigma = 0.0;
    CHECK_THROWS_AS(persistence_image({{0, 1}}, bad), tda_error);
    CHECK_THROWS_AS(persistence_image({{0, infinity}}, cfg), tda_error);
}

TEST_CASE("persistence image pixel sum captures the weights") {
    // box covers the transformed point out to six sigmas
    double sigma = 0.05;
    image_config cfg;
    cfg.xi_min = 0.5 - 6 * sigma - 0.02;
    cfg.xi_max = 0.5 + 6 * sigma + 0.02;
    cfg.eta_min = 0.8 - 6 * sigma - 0.02;
    cfg.eta_max = 0.8 + 6 * sigma + 0.02;
    cfg.n_xi = 8;
    cfg.n_eta = 8;
    cfg.sigma = sigma;
    cfg.eta_cap = 1.0; // weight = eta / 1.0

    diagram d{{0.5, 1.3}}; // xi = 0.5, eta = 0.8
    auto img = persistence_image(d, cfg);
    CHECK(img.sum() == doctest::Approx(0.8).epsilon(1e-6));

    tda_test::rng r(36);
    for (int trial = 0; trial < 3; ++trial) {
        diagram many = canonicalize(random_diagram(r, 4));
        if (many.empty()) continue;
        double eta_top = 0.0;
        for (const auto& iv : many) eta_top = std::max(eta_top, iv.death - iv.birth);
        image_config wide;
        wide.sigma = 0.08;
        wide.xi_min = -6 * wide.sigma - 0.1;
        wide.xi_max = 2.0 + 6 * wide.sigma + 0.1;
        wide.eta_min = -6 * wide.sigma - 0.1;
        wide.eta_max = eta_top + 6 * wide.sigma + 0.1;
        wide.n_xi = 10;
        wide.n_eta = 10;
        wide.eta_cap = eta_top;
        auto image = persistence_image(many, wide);
        double expected = 0.0;
        for (const auto& iv : many) expected += wide.weight_at(iv.death - iv.birth);
        CHECK(image.sum() == doctest::Approx(expected).epsilon(2e-5));
    }
}

TEST_CASE("persistence image agrees with numeric quadrature per pixel") {
    image_config cfg;
    cfg.xi_min = 0;
    cfg.xi_max = 1.5;
    cfg.eta_min = 0;
    cfg.eta_max = 1.5;
    cfg.n_xi = 3;
    cfg.n_eta = 3;
    cfg.sigma = 0.25;

    diagram d{{0.3, 1.0}, {0.8, 1.9}, {0.2, 0.5}};
    auto img = persistence_image(d, cfg);
    double dxi = (cfg.xi_max - cfg.xi_min) / cfg.n_xi;
    double deta = (cfg.eta_max - cfg.eta_min) / cfg.n_eta;
    size_t idx = 0;
    for (int ix = 0; ix < cfg.n_xi; ++ix)
        for (int ie = 0; ie < cfg.n_eta; ++ie, ++idx) {
            double x0 = cfg.xi_min + ix * dxi;
            double e0 = cfg.eta_min + ie * deta;
            double quad = simpson_pixel(d, cfg, x0, x0 + dxi, e0, e0 + deta, 64);
            REQUIRE(img.items[idx].second == doctest::Approx(quad).epsilon(1e-6));
        }
}
