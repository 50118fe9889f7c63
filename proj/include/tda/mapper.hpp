#pragma once

#include "tda/complex.hpp"
#include "tda/metric.hpp"

namespace tda {

// Overlapping closed intervals of equal length covering [f_min, f_max];
// consecutive intervals overlap by the fraction `overlap` of their length.
struct interval_cover {
    int n_intervals = 1;
    double overlap = 0.0; // in [0, 1)
    double f_min = 0.0;
    double f_max = 0.0;

    void validate() const;
    std::pair<double, double> block(int i) const;
};

struct mapper_node {
    int id = 0;
    int interval_index = 0;
    std::vector<int> members; // original point indices, sorted
};

struct mapper_graph {
    std::vector<mapper_node> nodes;
    filtered_complex nerve_complex; // simplices over node ids, values 0

    std::vector<std::pair<int, int>> edges() const;
    // first Betti number of the 1-skeleton: E - V + components
    int graph_betti_1() const;
};

// Left edge of the first empty histogram bin following a nonempty one,
// over [0, max merge height]; +infinity (one cluster) when there is no
// such gap or there are no merges.
double gap_threshold(const std::vector<double>& merge_heights, int bins);

mapper_graph mapper(const finite_metric_space& x, const std::vector<double>& filter,
                    const interval_cover& cover_spec, int max_dim, int bins = 10);

} // namespace tda
