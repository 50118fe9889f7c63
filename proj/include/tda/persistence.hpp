#pragma once

#include <map>

#include "tda/complex.hpp"
#include "tda/fp.hpp"

namespace tda {

// Per-dimension multiset of intervals; zero-length intervals are dropped.
struct barcode {
    std::vector<std::vector<interval>> by_dim;

    const std::vector<interval>& dim(int k) const {
        static const std::vector<interval> empty;
        if (k < 0 || k >= static_cast<int>(by_dim.size())) return empty;
        return by_dim[k];
    }
    int max_dim() const { return static_cast<int>(by_dim.size()) - 1; }
    void add(int k, interval iv) {
        if (k >= static_cast<int>(by_dim.size())) by_dim.resize(k + 1);
        by_dim[k].push_back(iv);
    }
    void sort();
};

// Number of intervals of dimension k containing r (half-open convention).
int intervals_containing(const barcode& b, int k, double r);

struct persistence_result {
    barcode bars;
    std::vector<filtered_simplex> filtration; // reduction order used
    // (birth column, death column) into `filtration`; death -1 = essential.
    // Zero-length pairs are kept here even though the barcode drops them.
    std::vector<std::pair<int, int>> pairs;
};

persistence_result compute_persistence(const filtered_complex& k, field_spec f, int max_hom_dim);
barcode compute_barcodes(const filtered_complex& k, field_spec f, int max_hom_dim);

filtered_complex lower_star_filtration(const filtered_complex& k,
                                       const std::map<int, double>& vertex_values);

int betti_at(const filtered_complex& k, double r, int dim, field_spec f);

// True iff some class of H_2(R, Fsub) has nonzero boundary, computed as
// ker(H_1(Fsub) -> H_1(R)) != 0 via the exact sequence of the pair.
bool relative_h_certificate(const filtered_complex& r, const filtered_complex& fsub, field_spec f);

using grade = std::pair<double, double>;

struct bigraded_simplex {
    simplex vertices;
    grade g;
};

// One-critical bifiltration: one grade per simplex, faces' grades
// coordinatewise <= cofaces' grades.
struct bifiltration {
    std::vector<bigraded_simplex> entries;

    filtered_complex sublevel_at(grade x) const;
    std::vector<std::string> monotonicity_violations() const;
};

std::vector<int> rank_invariant_2d(const bifiltration& b, field_spec f, int hom_dim,
                                   const std::vector<std::pair<grade, grade>>& grid);

} // namespace tda
