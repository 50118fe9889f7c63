#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tda/common.hpp"

namespace tda {

// Absolute slack applied to the triangle inequality when validating metrics
// built through floating point (Euclidean constructors round through sqrt).
constexpr double metric_tolerance = 1e-9;

struct point_cloud {
    std::vector<std::vector<double>> points;

    size_t size() const { return points.size(); }
    int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

struct tree_edge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
};

struct weighted_tree {
    int n = 0;
    std::vector<tree_edge> edges;
};

class finite_metric_space {
public:
    finite_metric_space() = default;
    finite_metric_space(int n, std::vector<double> row_major);

    int size() const { return n_; }
    double operator()(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, double v) {
        d_[static_cast<size_t>(i) * n_ + j] = v;
        d_[static_cast<size_t>(j) * n_ + i] = v;
    }
    double diameter() const;

    // Restriction to a subset of the points (indices need not be sorted;
    // point k of the result is subset[k]).
    finite_metric_space restrict(const std::vector<int>& subset) const;

private:
    int n_ = 0;
    std::vector<double> d_;
};

struct metric_violation {
    enum class kind { negative, diagonal, symmetry, triangle };
    kind type = kind::negative;
    int i = 0, j = 0, k = 0;
    std::string describe() const;
};

struct merge_event {
    double height = 0.0;
    int block_a = 0; // smallest member index of each merged block
    int block_b = 0;
};

// Single-linkage dendrogram: the family of partitions Pi_R, stored as its
// merge events. Pi_R is materialized on demand.
class dendrogram {
public:
    dendrogram() = default;
    dendrogram(int n, std::vector<merge_event> events) : n_(n), events_(std::move(events)) {}

    int size() const { return n_; }
    const std::vector<merge_event>& events() const { return events_; }

    // Labels points by the smallest member index of their block at radius r
    // (merges with height <= r applied).
    std::vector<int> partition_at(double r) const;
    std::vector<double> merge_heights() const;

private:
    int n_ = 0;
    std::vector<merge_event> events_;
};

finite_metric_space euclidean_metric(const point_cloud& pc);
finite_metric_space tree_metric(const weighted_tree& t);
std::vector<metric_violation> validate_metric(const finite_metric_space& x);
double perturbation_bound(const finite_metric_space& x, const finite_metric_space& y);
dendrogram single_linkage_dendrogram(const finite_metric_space& x);

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

} // namespace tda
