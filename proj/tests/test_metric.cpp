#include <doctest.h>

#include <algorithm>
#include <queue>

#include "tda/metric.hpp"

#include "test_support.hpp"

using namespace tda;

namespace {

// brute-force components of the threshold graph at r
std::vector<int> components_at(const finite_metric_space& x, double r) {
    int n = x.size();
    std::vector<int> label(n, -1);
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        label[s] = s;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (label[v] < 0 && x(u, v) <= r) {
                    label[v] = s;
                    q.push(v);
                }
        }
    }
    return label;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    for (size_t i = 0; i < fine.size(); ++i)
        for (size_t j = i + 1; j < fine.size(); ++j)
            if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
    return true;
}

} // namespace

TEST_CASE("euclidean metric basics") {
    point_cloud pc;
    pc.points = {{0, 0}, {3, 4}};
    auto x = euclidean_metric(pc);
    CHECK(x(0, 1) == doctest::Approx(5.0));

    point_cloud single;
    single.points = {{0, 0}};
    auto y = euclidean_metric(single);
    CHECK(y.size() == 1);
    CHECK(y(0, 0) == 0.0);

    point_cloud square;
    square.points = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    auto s = euclidean_metric(square);
    std::vector<double> offdiag;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) offdiag.push_back(s(i, j));
    std::sort(offdiag.begin(), offdiag.end());
    CHECK(offdiag[3] == doctest::Approx(1.0));
    CHECK(offdiag[4] == doctest::Approx(std::sqrt(2.0)));
    CHECK(offdiag[5] == doctest::Approx(std::sqrt(2.0)));

    point_cloud bad;
    bad.points = {{0, 0}, {1}};
    CHECK_THROWS_AS(euclidean_metric(bad), tda_error);
}

TEST_CASE("tree metric path sums and validity") {
    weighted_tree path;
    path.n = 3;
    path.edges = {{0, 1, 1.0}, {1, 2, 2.0}};
    auto x = tree_metric(path);
    CHECK(x(0, 2) == doctest::Approx(3.0));

    weighted_tree star;
    star.n = 4;
    star.edges = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
    auto s = tree_metric(star);
    CHECK(s(1, 2) == doctest::Approx(2.0));
    CHECK(s(2, 3) == doctest::Approx(2.0));

    weighted_tree cyclic;
    cyclic.n = 3;
    cyclic.edges = {{0, 1, 1.0}, {1, 0, 1.0}};
    CHECK_THROWS_AS(tree_metric(cyclic), tda_error);
}

TEST_CASE("random tree metrics satisfy the four-point condition") {
    tda_test::rng r(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto t = tda_test::random_tree(r, 10);
        auto x = tree_metric(t);
        CHECK(validate_metric(x).empty());
        // max of the three pairings is attained at least twice
        for (int a = 0; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b)
                for (int c = b + 1; c < 10; ++c)
                    for (int d = c + 1; d < 10; ++d) {
                        double s1 = x(a, b) + x(c, d);
                        double s2 = x(a, c) + x(b, d);
                        double s3 = x(a, d) + x(b, c);
                        double top = std::max({s1, s2, s3});
                        int attained = (std::abs(s1 - top) < 1e-9) + (std::abs(s2 - top) < 1e-9) +
                                       (std::abs(s3 - top) < 1e-9);
                        REQUIRE(attained >= 2);
                    }
    }
}

TEST_CASE("validate_metric reports violations") {
    finite_metric_space ok(2, {0, 1, 1, 0});
    CHECK(validate_metric(ok).empty());

    finite_metric_space asym(2, {0, 1, 2, 0});
    auto v1 = validate_metric(asym);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].type == metric_violation::kind::symmetry);

    finite_metric_space tri(3, {0, 1, 3, 1, 0, 1, 3, 1, 0});
    auto v2 = validate_metric(tri);
    REQUIRE(!v2.empty());
    CHECK(v2[0].type == metric_violation::kind::triangle);
}

TEST_CASE("perturbation bound is the sup difference") {
    tda_test::rng r(11);
    auto x = tda_test::random_generic_metric(r, 6);
    CHECK(perturbation_bound(x, x) == 0.0);

    auto y = x;
    y.set(1, 3, x(1, 3) + 0.3);
    CHECK(perturbation_bound(x, y) == doctest::Approx(0.3));

    auto z = tda_test::random_generic_metric(r, 6);
    double brute = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) brute = std::max(brute, std::abs(x(i, j) - z(i, j)));
    CHECK(perturbation_bound(x, z) == doctest::Approx(brute));

    finite_metric_space small(1, {0});
    CHECK_THROWS_AS(perturbation_bound(x, small), tda_error);
}

TEST_CASE("single linkage dendrogram merge events") {
    finite_metric_space x(3, {0, 1, 10, 1, 0, 9, 10, 9, 0});
    auto d = single_linkage_dendrogram(x);
    REQUIRE(d.events().size() == 2);
    CHECK(d.events()[0].height == doctest::Approx(1.0));
    CHECK(d.events()[1].height == doctest::Approx(9.0));

    finite_metric_space single(1, {0});
    CHECK(single_linkage_dendrogram(single).events().empty());

    finite_metric_space equal(4, std::vector<double>{0, 2, 2, 2, 2, 0, 2, 2, 2, 2, 0, 2, 2, 2, 2, 0});
    auto de = single_linkage_dendrogram(equal);
    REQUIRE(de.events().size() == 3);
    for (const auto& e : de.events()) CHECK(e.height == doctest::Approx(2.0));
    auto labels = de.partition_at(2.0);
    for (int i = 1; i < 4; ++i) CHECK(labels[i] == labels[0]);
}

TEST_CASE("dendrogram equals threshold-graph components at every scale") {
    tda_test::rng r(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = r.uniform_int(2, 12);
        auto x = trial % 2 == 0 ? tda_test::random_generic_metric(r, n)
                                : euclidean_metric(tda_test::random_cloud(r, n, 2));
        auto d = single_linkage_dendrogram(x);

        std::vector<double> probes{0.0};
        for (double h : d.merge_heights()) {
            probes.push_back(h);
            probes.push_back(h + 1e-6);
            probes.push_back(std::max(0.0, h - 1e-6));
        }
        for (double t : probes)
            REQUIRE(same_partition(d.partition_at(t), components_at(x, t)));

        // refinement along consecutive merge heights
        auto heights = d.merge_heights();
        for (size_t i = 0; i + 1 < heights.size(); ++i)
            REQUIRE(refines(d.partition_at(heights[i]), d.partition_at(heights[i + 1])));
    }
}
