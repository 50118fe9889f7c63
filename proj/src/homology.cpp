#include "tda/homology.hpp"

#include <algorithm>

namespace tda {

std::vector<simplex> simplices_of_dim(const filtered_complex& k, int dim) {
    std::vector<simplex> out;
    for (const auto& e : k.entries())
        if (static_cast<int>(e.vertices.size()) == dim + 1) out.push_back(e.vertices);
    std::sort(out.begin(), out.end());
    return out;
}

fp_matrix boundary_matrix(const std::vector<simplex>& dim_cells,
                          const std::vector<simplex>& facet_cells, int p) {
    fp_matrix m(static_cast<int>(facet_cells.size()), static_cast<int>(dim_cells.size()), p);
    for (int j = 0; j < static_cast<int>(dim_cells.size()); ++j) {
        const simplex& s = dim_cells[j];
        int sign = 1;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            simplex face;
            face.reserve(s.size() - 1);
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) face.push_back(s[t]);
            auto it = std::lower_bound(facet_cells.begin(), facet_cells.end(), face);
            if (it == facet_cells.end() || *it != face)
                throw tda_error("closure", "boundary face missing from complex");
            m.set(static_cast<int>(it - facet_cells.begin()), j, sign);
            sign = -sign;
        }
    }
    return m;
}

int betti_number(const filtered_complex& k, int dim, int p) {
    auto cells = simplices_of_dim(k, dim);
    if (cells.empty()) return 0;
    auto below = simplices_of_dim(k, dim - 1);
    auto above = simplices_of_dim(k, dim + 1);
    int rank_down = dim == 0 ? 0 : boundary_matrix(cells, below, p).rank();
    int rank_up = above.empty() ? 0 : boundary_matrix(above, cells, p).rank();
    return static_cast<int>(cells.size()) - rank_down - rank_up;
}

homology_basis compute_homology_basis(const filtered_complex& k, int dim, int p) {
    homology_basis basis;
    basis.p = p;
    basis.cells = simplices_of_dim(k, dim);
    int n = static_cast<int>(basis.cells.size());
    if (n == 0) {
        basis.cycle_reps = fp_matrix(0, 0, p);
        basis.boundary_basis = fp_matrix(0, 0, p);
        return basis;
    }
    auto below = simplices_of_dim(k, dim - 1);
    auto above = simplices_of_dim(k, dim + 1);

    fp_matrix cycles = dim == 0 ? fp_matrix::identity(n, p)
                                : boundary_matrix(basis.cells, below, p).nullspace();
    basis.boundary_basis = above.empty() ? fp_matrix(n, 0, p)
                                         : boundary_matrix(above, basis.cells, p).column_space();

    // extend the boundary basis to a basis of the cycle space; the added
    // columns represent homology classes
    fp_matrix span = basis.boundary_basis;
    int current_rank = span.rank();
    fp_matrix reps(n, 0, p);
    for (int c = 0; c < cycles.cols(); ++c) {
        fp_matrix col(n, 1, p);
        for (int r = 0; r < n; ++r) col.set(r, 0, cycles.at(r, c));
        fp_matrix trial = span.hconcat(col);
        if (trial.rank() > current_rank) {
            span = std::move(trial);
            ++current_rank;
            reps = reps.hconcat(col);
        }
    }
    basis.cycle_reps = std::move(reps);
    return basis;
}

std::vector<int> homology_basis::express(const std::vector<int>& cycle) const {
    fp_matrix system = cycle_reps.hconcat(boundary_basis);
    std::vector<int> x;
    if (!system.solve(cycle, x))
        throw tda_error("homology", "chain is not a cycle of the recorded class space");
    x.resize(cycle_reps.cols());
    return x;
}

fp_matrix chain_map_matrix(const std::vector<simplex>& src_cells,
                           const std::vector<simplex>& dst_cells,
                           const std::function<int(int)>& vertex_map, int p) {
    fp_matrix m(static_cast<int>(dst_cells.size()), static_cast<int>(src_cells.size()), p);
    for (int j = 0; j < static_cast<int>(src_cells.size()); ++j) {
        simplex image;
        image.reserve(src_cells[j].size());
        for (int v : src_cells[j]) image.push_back(vertex_map(v));

        // sort by adjacent transpositions, tracking the permutation sign
        int sign = 1;
        bool degenerate = false;
        for (size_t a = 0; a < image.size() && !degenerate; ++a)
            for (size_t b = a + 1; b < image.size(); ++b) {
                if (image[a] == image[b]) {
                    degenerate = true;
                    break;
                }
                if (image[a] > image[b]) {
                    std::swap(image[a], image[b]);
                    sign = -sign;
                }
            }
        if (degenerate) continue;
        auto it = std::lower_bound(dst_cells.begin(), dst_cells.end(), image);
        if (it == dst_cells.end() || *it != image)
            throw tda_error("homology", "simplicial map image missing from target complex");
        m.set(static_cast<int>(it - dst_cells.begin()), j, sign);
    }
    return m;
}

fp_matrix induced_map(const homology_basis& src, const homology_basis& dst,
                      const std::function<int(int)>& vertex_map) {
    fp_matrix out(dst.dim_h(), src.dim_h(), src.p);
    if (src.dim_h() == 0) return out;
    fp_matrix chain = chain_map_matrix(src.cells, dst.cells, vertex_map, src.p);
    for (int c = 0; c < src.dim_h(); ++c) {
        std::vector<int> rep(src.cells.size());
        for (size_t r = 0; r < rep.size(); ++r) rep[r] = src.cycle_reps.at(static_cast<int>(r), c);
        std::vector<int> image = chain.apply(rep);
        std::vector<int> coords = dst.dim_h() > 0 ? dst.express(image) : std::vector<int>{};
        for (int r = 0; r < dst.dim_h(); ++r) out.set(r, c, coords[r]);
    }
    return out;
}

} // namespace tda
