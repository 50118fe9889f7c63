#pragma once

#include <map>

#include "tda/fp.hpp"
#include "tda/homology.hpp"
#include "tda/metric.hpp"

namespace tda {

// Arrow i sits between slots i and i+1 (slots are 1-based, 1..m).
// Forward: V_i -> V_{i+1}, matrix of shape dims[i+1] x dims[i].
// Backward: V_{i+1} -> V_i, matrix of shape dims[i] x dims[i+1].
struct zigzag_arrow {
    bool forward = true;
    fp_matrix matrix;
};

struct zigzag_diagram {
    int p = 2;
    std::vector<int> dims;
    std::vector<zigzag_arrow> arrows;

    int slots() const { return static_cast<int>(dims.size()); }
    void validate() const;
};

// Multiset of integer intervals [i, j], 1 <= i <= j <= slots.
using zigzag_barcode = std::vector<std::pair<int, int>>;

zigzag_diagram interval_module(int i, int j, int m, const std::vector<bool>& forward_pattern,
                               int p = 2);

// Unique interval-summand multiset (Gabriel); exact over Z/p.
zigzag_barcode decompose(const zigzag_diagram& z);

// Number of interval summands containing [s, t]: the rank of the composite
// linear relation from slot s to slot t.
int zigzag_compression_rank(const zigzag_diagram& z, int s, int t);

zigzag_diagram sample_zigzag(const finite_metric_space& x,
                             const std::vector<std::vector<int>>& samples, double r, int hom_dim,
                             field_spec f);

// Slabs [k, k+1] for k = 0..n_levels-1 interleaved with the integer level
// sets 1..n_levels-1, realized as full subcomplexes of the base complex.
zigzag_diagram levelset_zigzag(const filtered_complex& base, const std::map<int, double>& f,
                               int n_levels, int hom_dim, field_spec fs);

zigzag_diagram witness_comparison_zigzag(const finite_metric_space& x,
                                         const std::vector<std::vector<int>>& landmark_sets,
                                         double r, int hom_dim, field_spec f);

} // namespace tda
