#pragma once

#include <optional>
#include <vector>

#include "tda/metric.hpp"

namespace tda {

// Vertices strictly increasing; dimension = size - 1.
using simplex = std::vector<int>;

struct filtered_simplex {
    simplex vertices;
    double value = 0.0;
};

// Simplices with entrance values. sort_filtration() orders by
// (value, dimension, lexicographic vertices) so faces precede cofaces.
class filtered_complex {
public:
    filtered_complex() = default;
    explicit filtered_complex(std::vector<filtered_simplex> entries);

    const std::vector<filtered_simplex>& entries() const { return entries_; }
    std::vector<filtered_simplex>& entries() { return entries_; }
    size_t size() const { return entries_.size(); }
    int max_dim() const;
    double max_value() const;
    int vertex_count() const;

    void sort_filtration();
    bool contains(const simplex& s) const;
    std::optional<double> value_of(const simplex& s) const;

    // Empty iff every face of every simplex is present with value <= its
    // coface's value and no simplex is duplicated/malformed.
    std::vector<std::string> closure_violations() const;

    // Simplices with value <= r (entrance values kept).
    filtered_complex sublevel(double r) const;

    // Full subcomplex on a vertex subset (original vertex ids kept).
    filtered_complex full_subcomplex(const std::vector<int>& vertices) const;

private:
    std::vector<filtered_simplex> entries_;
};

struct cover {
    std::vector<std::vector<int>> blocks;
    int ground_size = 0;

    // blocks should cover 0..ground_size-1; a gap is worth a warning, not
    // an error (the nerve is still well defined)
    bool covers_ground() const;
};

enum class witness_variant { strong, lazy, weak };

filtered_complex vietoris_rips(const finite_metric_space& x, double r_max, int max_dim);
filtered_complex cech(const point_cloud& pc, double r_max, int max_dim);
bool check_interleaving(const point_cloud& pc, double r, int max_dim);
filtered_complex alpha_complex_2d(const point_cloud& pc);
filtered_complex witness(const finite_metric_space& x, const std::vector<int>& landmarks,
                         double r_max, witness_variant variant, int max_dim);
filtered_complex nerve(const cover& c, int max_dim);

struct bivariant_witness_result {
    filtered_complex complex;              // vertex ids index into `pairs`
    std::vector<std::pair<int, int>> pairs; // (index into l1, index into l2)
    // projection vertex maps: complex vertex -> vertex of witness(x, l1/l2, r)
    std::vector<int> to_first;
    std::vector<int> to_second;
};

bivariant_witness_result bivariant_witness(const finite_metric_space& x,
                                           const std::vector<int>& l1,
                                           const std::vector<int>& l2, double r,
                                           int max_dim);

// Exact minimum enclosing ball radius by support-set enumeration
// (points in R^d, d <= 3, at most 4 points).
double miniball_radius(const std::vector<std::vector<double>>& pts);

} // namespace tda
