#pragma once

#include <functional>

#include "tda/complex.hpp"
#include "tda/fp.hpp"

namespace tda {

// Fixed-scale simplicial homology over Z/p: boundary matrices, Betti
// numbers, explicit cycle bases, and maps induced by simplicial maps.

std::vector<simplex> simplices_of_dim(const filtered_complex& k, int dim);

// Rows indexed by (dim-1)-simplices, columns by dim-simplices, entries
// the usual alternating signs reduced mod p.
fp_matrix boundary_matrix(const std::vector<simplex>& dim_cells,
                          const std::vector<simplex>& facet_cells, int p);

int betti_number(const filtered_complex& k, int dim, int p);

struct homology_basis {
    std::vector<simplex> cells; // chain coordinates, sorted lexicographically
    fp_matrix cycle_reps;       // one column per homology class
    fp_matrix boundary_basis;   // basis of the boundary subspace
    int p = 2;

    int dim_h() const { return cycle_reps.cols(); }

    // Coordinates of a cycle's class in the representative basis.
    std::vector<int> express(const std::vector<int>& cycle) const;
};

homology_basis compute_homology_basis(const filtered_complex& k, int dim, int p);

// Chain map of a simplicial map in degree `dim`: simplices with repeated
// image vertices map to zero, others pick up the sign of the sorting
// permutation. `vertex_map` sends source vertex ids to target vertex ids.
fp_matrix chain_map_matrix(const std::vector<simplex>& src_cells,
                           const std::vector<simplex>& dst_cells,
                           const std::function<int(int)>& vertex_map, int p);

// Matrix of H(src) -> H(dst) in the bases' representative coordinates.
fp_matrix induced_map(const homology_basis& src, const homology_basis& dst,
                      const std::function<int(int)>& vertex_map);

} // namespace tda
