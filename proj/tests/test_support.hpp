#pragma once

#include <random>
#include <vector>

#include "tda/metric.hpp"

namespace tda_test {

// deterministic uniforms, independent of library distributions
struct rng {
    std::mt19937_64 engine;
    explicit rng(unsigned long long seed) : engine(seed) {}

    double uniform() { return static_cast<double>(engine() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive
        return lo + static_cast<int>(engine() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

inline tda::point_cloud random_cloud(rng& r, int n, int dim, double scale = 1.0) {
    tda::point_cloud pc;
    for (int i = 0; i < n; ++i) {
        std::vector<double> p;
        for (int d = 0; d < dim; ++d) p.push_back(r.uniform(0.0, scale));
        pc.points.push_back(std::move(p));
    }
    return pc;
}

// any symmetric matrix with entries in [1, 2] and zero diagonal is a metric
inline tda::finite_metric_space random_generic_metric(rng& r, int n) {
    tda::finite_metric_space x(n, std::vector<double>(static_cast<size_t>(n) * n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) x.set(i, j, r.uniform(1.0, 2.0));
    return x;
}

inline tda::weighted_tree random_tree(rng& r, int n) {
    tda::weighted_tree t;
    t.n = n;
    for (int v = 1; v < n; ++v)
        t.edges.push_back({r.uniform_int(0, v - 1), v, r.uniform(0.5, 1.5)});
    return t;
}

} // namespace tda_test
