#include "tda/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace tda {

finite_metric_space::finite_metric_space(int n, std::vector<double> row_major)
    : n_(n), d_(std::move(row_major)) {
    if (n < 0 || d_.size() != static_cast<size_t>(n) * n)
        throw tda_error("metric", "distance matrix size does not match point count");
}

double finite_metric_space::diameter() const {
    double m = 0.0;
    for (double v : d_) m = std::max(m, v);
    return m;
}

finite_metric_space finite_metric_space::restrict(const std::vector<int>& subset) const {
    int m = static_cast<int>(subset.size());
    std::vector<double> d(static_cast<size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (subset[i] < 0 || subset[i] >= n_ || subset[j] < 0 || subset[j] >= n_)
                throw tda_error("metric", "restriction index out of range");
            d[static_cast<size_t>(i) * m + j] = (*this)(subset[i], subset[j]);
        }
    return finite_metric_space(m, std::move(d));
}

std::string metric_violation::describe() const {
    switch (type) {
    case kind::negative:
        return "negative distance at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case kind::diagonal:
        return "nonzero diagonal at " + std::to_string(i);
    case kind::symmetry:
        return "asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case kind::triangle:
        return "triangle violation d(" + std::to_string(i) + "," + std::to_string(j) + ") > d(" +
               std::to_string(i) + "," + std::to_string(k) + ") + d(" + std::to_string(k) + "," +
               std::to_string(j) + ")";
    }
    return "unknown";
}

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

finite_metric_space euclidean_metric(const point_cloud& pc) {
    if (pc.points.empty()) throw tda_error("metric", "point cloud is empty");
    size_t dim = pc.points.front().size();
    if (dim == 0) throw tda_error("metric", "points must have dimension >= 1");
    for (const auto& p : pc.points) {
        if (p.size() != dim) throw tda_error("metric", "dimension mismatch among points");
        for (double c : p)
            if (!std::isfinite(c)) throw tda_error("metric", "non-finite coordinate");
    }
    int n = static_cast<int>(pc.points.size());
    finite_metric_space x(n, std::vector<double>(static_cast<size_t>(n) * n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            x.set(i, j, euclidean_distance(pc.points[i], pc.points[j]));
    return x;
}

finite_metric_space tree_metric(const weighted_tree& t) {
    int n = t.n;
    if (n <= 0) throw tda_error("metric", "tree must have at least one vertex");
    if (static_cast<int>(t.edges.size()) != n - 1)
        throw tda_error("metric", "tree must have exactly n-1 edges");
    std::vector<std::vector<std::pair<int, double>>> adj(n);
    for (const auto& e : t.edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
            throw tda_error("metric", "bad tree edge");
        if (e.weight <= 0) throw tda_error("metric", "tree edge weights must be positive");
        adj[e.u].emplace_back(e.v, e.weight);
        adj[e.v].emplace_back(e.u, e.weight);
    }
    finite_metric_space x(n, std::vector<double>(static_cast<size_t>(n) * n, 0.0));
    // BFS from each root; the path is unique so edge-weight sums are exact.
    for (int root = 0; root < n; ++root) {
        std::vector<double> dist(n, -1.0);
        dist[root] = 0.0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [v, w] : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + w;
                    q.push(v);
                }
        }
        for (int j = 0; j < n; ++j) {
            if (dist[j] < 0) throw tda_error("metric", "edge list is disconnected or cyclic");
            x.set(root, j, dist[j]);
        }
    }
    return x;
}

std::vector<metric_violation> validate_metric(const finite_metric_space& x) {
    std::vector<metric_violation> out;
    int n = x.size();
    for (int i = 0; i < n; ++i) {
        if (x(i, i) != 0.0)
            out.push_back({metric_violation::kind::diagonal, i, i, 0});
        for (int j = 0; j < n; ++j) {
            if (x(i, j) < 0.0 && i < j)
                out.push_back({metric_violation::kind::negative, i, j, 0});
            if (i < j && x(i, j) != x(j, i))
                out.push_back({metric_violation::kind::symmetry, i, j, 0});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (x(i, j) > x(i, k) + x(k, j) + metric_tolerance) {
                    out.push_back({metric_violation::kind::triangle, i, j, k});
                    break; // one witness per pair keeps the report readable
                }
            }
        }
    return out;
}

double perturbation_bound(const finite_metric_space& x, const finite_metric_space& y) {
    if (x.size() != y.size()) throw tda_error("metric", "perturbation_bound size mismatch");
    double m = 0.0;
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) m = std::max(m, std::abs(x(i, j) - y(i, j)));
    return m;
}

std::vector<int> dendrogram::partition_at(double r) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& e : events_) {
        if (e.height > r) break;
        int ra = find(e.block_a), rb = find(e.block_b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<int> label(n_);
    for (int i = 0; i < n_; ++i) label[i] = find(i);
    return label;
}

std::vector<double> dendrogram::merge_heights() const {
    std::vector<double> h;
    h.reserve(events_.size());
    for (const auto& e : events_) h.push_back(e.height);
    return h;
}

dendrogram single_linkage_dendrogram(const finite_metric_space& x) {
    auto violations = validate_metric(x);
    if (!violations.empty())
        throw tda_error("metric", "invalid metric: " + violations.front().describe());
    int n = x.size();

    struct cand {
        double d;
        int i, j;
    };
    std::vector<cand> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({x(i, j), i, j});
    std::sort(pairs.begin(), pairs.end(),
              [](const cand& a, const cand& b) { return a.d < b.d; });

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    // Simultaneous merges serialize in ascending lexicographic order of the
    // smallest member index of the blocks involved; the partition family is
    // the same under any tie order.
    std::vector<merge_event> events;
    size_t lo_idx = 0;
    while (lo_idx < pairs.size() && static_cast<int>(events.size()) < n - 1) {
        size_t hi_idx = lo_idx;
        while (hi_idx < pairs.size() && pairs[hi_idx].d == pairs[lo_idx].d) ++hi_idx;
        while (true) {
            int best_a = -1, best_b = -1;
            for (size_t k = lo_idx; k < hi_idx; ++k) {
                int ra = find(pairs[k].i), rb = find(pairs[k].j);
                if (ra == rb) continue;
                int a = std::min(ra, rb), b = std::max(ra, rb);
                if (best_a < 0 || a < best_a || (a == best_a && b < best_b)) {
                    best_a = a;
                    best_b = b;
                }
            }
            if (best_a < 0) break;
            // union-by-min keeps each root equal to its block's smallest member
            parent[best_b] = best_a;
            events.push_back({pairs[lo_idx].d, best_a, best_b});
        }
        lo_idx = hi_idx;
    }
    return dendrogram(n, std::move(events));
}

} // namespace tda
