#include "tda/mapper.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace tda {

void interval_cover::validate() const {
    if (n_intervals < 1) throw tda_error("argument", "cover needs at least one interval");
    if (overlap < 0.0 || overlap >= 1.0)
        throw tda_error("argument", "cover overlap must lie in [0, 1)");
    if (f_max < f_min) throw tda_error("argument", "cover range is empty");
}

std::pair<double, double> interval_cover::block(int i) const {
    // stride = length * (1 - overlap); the union covers [f_min, f_max]
    double span = f_max - f_min;
    double length = span / (n_intervals - (n_intervals - 1) * overlap);
    double stride = length * (1.0 - overlap);
    double lo = f_min + i * stride;
    return {lo, lo + length};
}

std::vector<std::pair<int, int>> mapper_graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : nerve_complex.entries())
        if (e.vertices.size() == 2) out.emplace_back(e.vertices[0], e.vertices[1]);
    return out;
}

int mapper_graph::graph_betti_1() const {
    int v = static_cast<int>(nodes.size());
    auto es = edges();
    std::vector<int> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int components = v;
    for (auto [a, b] : es) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return static_cast<int>(es.size()) - v + components;
}

double gap_threshold(const std::vector<double>& merge_heights, int bins) {
    if (bins < 1) throw tda_error("argument", "gap heuristic needs at least one bin");
    if (merge_heights.empty()) return infinity;
    double top = *std::max_element(merge_heights.begin(), merge_heights.end());
    if (top <= 0.0) return infinity; // all merges at zero: a single cluster
    double width = top / bins;
    std::vector<int> histogram(bins, 0);
    for (double h : merge_heights) {
        int b = std::min(static_cast<int>(h / width), bins - 1);
        ++histogram[b];
    }
    // the gap is the first empty bin above the populated low range; leading
    // empty bins are not gaps (they would shatter everything into singletons)
    bool seen_nonempty = false;
    for (int b = 0; b < bins; ++b) {
        if (histogram[b] > 0)
            seen_nonempty = true;
        else if (seen_nonempty)
            return b * width;
    }
    return infinity;
}

mapper_graph mapper(const finite_metric_space& x, const std::vector<double>& filter,
                    const interval_cover& cover_spec, int max_dim, int bins) {
    if (x.size() == 0) throw tda_error("argument", "mapper input is empty");
    if (static_cast<int>(filter.size()) != x.size())
        throw tda_error("argument", "filter must assign a value to every point");
    cover_spec.validate();

    mapper_graph out;
    for (int i = 0; i < cover_spec.n_intervals; ++i) {
        auto [lo, hi] = cover_spec.block(i);
        std::vector<int> members;
        for (int v = 0; v < x.size(); ++v)
            if (filter[v] >= lo && filter[v] <= hi) members.push_back(v);
        if (members.empty()) continue;

        // cluster the metric restriction with the histogram gap heuristic
        finite_metric_space restricted = x.restrict(members);
        dendrogram dend = single_linkage_dendrogram(restricted);
        double threshold = gap_threshold(dend.merge_heights(), bins);
        std::vector<int> labels = dend.partition_at(threshold);

        std::map<int, std::vector<int>> clusters; // keyed by minimal local index
        for (size_t local = 0; local < members.size(); ++local)
            clusters[labels[local]].push_back(members[local]);
        for (auto& [rep, pts] : clusters) {
            mapper_node node;
            node.id = static_cast<int>(out.nodes.size());
            node.interval_index = i;
            node.members = pts; // already ascending
            out.nodes.push_back(std::move(node));
        }
    }

    cover node_cover;
    node_cover.ground_size = x.size();
    for (const auto& n : out.nodes) node_cover.blocks.push_back(n.members);
    out.nerve_complex = nerve(node_cover, max_dim);
    return out;
}

} // namespace tda
