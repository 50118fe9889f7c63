#include "tda/zigzag.hpp"

#include <algorithm>

#include "tda/complex.hpp"

namespace tda {

void zigzag_diagram::validate() const {
    if (dims.empty()) throw tda_error("zigzag", "diagram needs at least one slot");
    if (arrows.size() + 1 != dims.size())
        throw tda_error("zigzag", "diagram needs one arrow between consecutive slots");
    for (size_t i = 0; i < arrows.size(); ++i) {
        const auto& a = arrows[i];
        int r_expect = a.forward ? dims[i + 1] : dims[i];
        int c_expect = a.forward ? dims[i] : dims[i + 1];
        if (a.matrix.rows() != r_expect || a.matrix.cols() != c_expect)
            throw tda_error("zigzag", "arrow " + std::to_string(i + 1) + " has wrong shape");
        if (a.matrix.p() != p) throw tda_error("zigzag", "arrow field mismatch");
    }
}

zigzag_diagram interval_module(int i, int j, int m, const std::vector<bool>& forward_pattern,
                               int p) {
    if (!(1 <= i && i <= j && j <= m)) throw tda_error("zigzag", "bad interval indices");
    if (static_cast<int>(forward_pattern.size()) != m - 1)
        throw tda_error("zigzag", "direction pattern must have m-1 entries");
    zigzag_diagram z;
    z.p = p;
    z.dims.assign(m, 0);
    for (int t = i; t <= j; ++t) z.dims[t - 1] = 1;
    for (int t = 1; t < m; ++t) {
        bool fwd = forward_pattern[t - 1];
        int rows = fwd ? z.dims[t] : z.dims[t - 1];
        int cols = fwd ? z.dims[t - 1] : z.dims[t];
        fp_matrix mat(rows, cols, p);
        if (rows == 1 && cols == 1 && t >= i && t < j) mat.set(0, 0, 1);
        z.arrows.push_back({fwd, std::move(mat)});
    }
    return z;
}

namespace {

// A linear relation C <= U x W stored as a spanning set of columns: the
// first dim(U) rows are the U component, the rest the W component.
struct relation {
    fp_matrix generators;
    int dim_u = 0;
    int dim_w = 0;
};

relation identity_relation(int n, int p) {
    fp_matrix g(2 * n, n, p);
    for (int i = 0; i < n; ++i) {
        g.set(i, i, 1);
        g.set(n + i, i, 1);
    }
    return {std::move(g), n, n};
}

relation extend_forward(const relation& rel, const fp_matrix& f) {
    // (u, w) in C becomes (u, F w)
    int nu = rel.dim_u, nw = rel.dim_w, k = rel.generators.cols();
    fp_matrix g(nu + f.rows(), k, f.p());
    for (int c = 0; c < k; ++c) {
        for (int r = 0; r < nu; ++r) g.set(r, c, rel.generators.at(r, c));
        for (int r = 0; r < f.rows(); ++r) {
            long long acc = 0;
            for (int t = 0; t < nw; ++t)
                acc += static_cast<long long>(f.at(r, t)) * rel.generators.at(nu + t, c);
            g.set(nu + r, c, acc);
        }
    }
    return {std::move(g), nu, f.rows()};
}

relation extend_backward(const relation& rel, const fp_matrix& g_map) {
    // (u, w') with G w' = w for some (u, w) in C: nullspace of [W | -G]
    int nu = rel.dim_u, nw = rel.dim_w, k = rel.generators.cols();
    int nw2 = g_map.cols();
    int p = g_map.p();
    fp_matrix sys(nw, k + nw2, p);
    for (int r = 0; r < nw; ++r) {
        for (int c = 0; c < k; ++c) sys.set(r, c, rel.generators.at(nu + r, c));
        for (int c = 0; c < nw2; ++c) sys.set(r, k + c, -g_map.at(r, c));
    }
    fp_matrix null = sys.nullspace();
    fp_matrix out(nu + nw2, null.cols(), p);
    for (int c = 0; c < null.cols(); ++c) {
        for (int r = 0; r < nu; ++r) {
            long long acc = 0;
            for (int t = 0; t < k; ++t)
                acc += static_cast<long long>(rel.generators.at(r, t)) * null.at(t, c);
            out.set(r, c, acc);
        }
        for (int r = 0; r < nw2; ++r) out.set(nu + r, c, null.at(k + r, c));
    }
    return {std::move(out), nu, nw2};
}

int relation_rank(const relation& rel) {
    // dim(image) - dim(indeterminacy)
    int full = rel.generators.rank();
    int top = rel.generators.submatrix_rows(0, rel.dim_u).rank();
    int bottom = rel.generators.submatrix_rows(rel.dim_u, rel.dim_w).rank();
    return bottom - (full - top);
}

} // namespace

int zigzag_compression_rank(const zigzag_diagram& z, int s, int t) {
    z.validate();
    if (!(1 <= s && s <= t && t <= z.slots())) throw tda_error("zigzag", "bad slot pair");
    relation rel = identity_relation(z.dims[s - 1], z.p);
    for (int u = s; u < t; ++u) {
        const auto& a = z.arrows[u - 1];
        rel = a.forward ? extend_forward(rel, a.matrix) : extend_backward(rel, a.matrix);
    }
    return relation_rank(rel);
}

zigzag_barcode decompose(const zigzag_diagram& z) {
    z.validate();
    int m = z.slots();

    // r[s][t] = number of interval summands containing [s, t]
    std::vector<std::vector<int>> r(m + 2, std::vector<int>(m + 2, 0));
    for (int s = 1; s <= m; ++s) {
        relation rel = identity_relation(z.dims[s - 1], z.p);
        r[s][s] = relation_rank(rel);
        for (int t = s + 1; t <= m; ++t) {
            const auto& a = z.arrows[t - 2];
            rel = a.forward ? extend_forward(rel, a.matrix) : extend_backward(rel, a.matrix);
            r[s][t] = relation_rank(rel);
        }
    }

    zigzag_barcode out;
    for (int s = 1; s <= m; ++s)
        for (int t = s; t <= m; ++t) {
            int mult = r[s][t] - r[s - 1][t] - (t + 1 <= m ? r[s][t + 1] : 0) +
                       (t + 1 <= m ? r[s - 1][t + 1] : 0);
            if (mult < 0) throw tda_error("zigzag", "negative interval multiplicity");
            for (int c = 0; c < mult; ++c) out.emplace_back(s, t);
        }

    // dimension identity sanity check
    std::vector<int> covered(m + 1, 0);
    for (auto [a, b] : out)
        for (int t = a; t <= b; ++t) ++covered[t];
    for (int t = 1; t <= m; ++t)
        if (covered[t] != z.dims[t - 1])
            throw tda_error("zigzag", "interval multiset does not cover the slot dimensions");

    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Application diagrams

namespace {

// position of each original vertex id inside a sorted id list
std::function<int(int)> inclusion_map(const std::vector<int>& src_ids,
                                      const std::vector<int>& dst_ids) {
    return [src_ids, dst_ids](int local) {
        int original = src_ids[local];
        auto it = std::lower_bound(dst_ids.begin(), dst_ids.end(), original);
        if (it == dst_ids.end() || *it != original)
            throw tda_error("zigzag", "inclusion target misses a vertex");
        return static_cast<int>(it - dst_ids.begin());
    };
}

} // namespace

zigzag_diagram sample_zigzag(const finite_metric_space& x,
                             const std::vector<std::vector<int>>& samples, double r, int hom_dim,
                             field_spec f) {
    if (samples.size() < 2) throw tda_error("zigzag", "sample zigzag needs at least two samples");

    std::vector<std::vector<int>> sorted;
    for (const auto& raw : samples) {
        std::vector<int> s = raw;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        sorted.push_back(std::move(s));
    }

    // slots: X_1, X_1 n X_2, X_2, X_2 n X_3, ..., X_n
    std::vector<std::vector<int>> slot_ids;
    for (size_t i = 0; i < sorted.size(); ++i) {
        slot_ids.push_back(sorted[i]);
        if (i + 1 < sorted.size()) {
            std::vector<int> inter;
            std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[i + 1].begin(),
                                  sorted[i + 1].end(), std::back_inserter(inter));
            slot_ids.push_back(std::move(inter));
        }
    }

    std::vector<homology_basis> bases;
    for (const auto& ids : slot_ids) {
        filtered_complex k =
            ids.empty() ? filtered_complex{} : vietoris_rips(x.restrict(ids), r, hom_dim + 1);
        bases.push_back(compute_homology_basis(k, hom_dim, f.p));
    }

    zigzag_diagram z;
    z.p = f.p;
    for (const auto& b : bases) z.dims.push_back(b.dim_h());
    for (size_t t = 0; t + 1 < slot_ids.size(); ++t) {
        bool intersection_on_left = (t % 2 == 1); // slots alternate sample / intersection
        if (intersection_on_left) {
            // forward arrow: intersection (slot t) -> sample (slot t+1)
            auto vm = inclusion_map(slot_ids[t], slot_ids[t + 1]);
            z.arrows.push_back({true, induced_map(bases[t], bases[t + 1], vm)});
        } else {
            // backward arrow: intersection (slot t+1) -> sample (slot t)
            auto vm = inclusion_map(slot_ids[t + 1], slot_ids[t]);
            z.arrows.push_back({false, induced_map(bases[t + 1], bases[t], vm)});
        }
    }
    z.validate();
    return z;
}

zigzag_diagram levelset_zigzag(const filtered_complex& base, const std::map<int, double>& f,
                               int n_levels, int hom_dim, field_spec fs) {
    if (n_levels < 1) throw tda_error("zigzag", "levelset zigzag needs at least one slab");
    auto value_of = [&](int v) {
        auto it = f.find(v);
        if (it == f.end())
            throw tda_error("argument", "level function missing vertex " + std::to_string(v));
        return it->second;
    };
    std::vector<int> all_vertices;
    for (const auto& e : base.entries())
        if (e.vertices.size() == 1) all_vertices.push_back(e.vertices[0]);

    // slots: slab_0, level_1, slab_1, ..., level_{N-1}, slab_{N-1}
    std::vector<filtered_complex> spaces;
    std::vector<bool> is_level;
    for (int k = 0; k < n_levels; ++k) {
        if (k > 0) {
            std::vector<int> level_ids;
            for (int v : all_vertices)
                if (std::abs(value_of(v) - k) < 1e-12) level_ids.push_back(v);
            spaces.push_back(base.full_subcomplex(level_ids));
            is_level.push_back(true);
        }
        std::vector<int> slab_ids;
        for (int v : all_vertices) {
            double fv = value_of(v);
            if (fv >= k && fv <= k + 1) slab_ids.push_back(v);
        }
        spaces.push_back(base.full_subcomplex(slab_ids));
        is_level.push_back(false);
    }

    std::vector<homology_basis> bases;
    for (const auto& s : spaces) bases.push_back(compute_homology_basis(s, hom_dim, fs.p));

    zigzag_diagram z;
    z.p = fs.p;
    for (const auto& b : bases) z.dims.push_back(b.dim_h());
    auto ident = [](int v) { return v; };
    for (size_t t = 0; t + 1 < spaces.size(); ++t) {
        if (is_level[t]) {
            // level -> next slab, forward
            z.arrows.push_back({true, induced_map(bases[t], bases[t + 1], ident)});
        } else {
            // next slot is a level mapping back into this slab
            z.arrows.push_back({false, induced_map(bases[t + 1], bases[t], ident)});
        }
    }
    z.validate();
    return z;
}

zigzag_diagram witness_comparison_zigzag(const finite_metric_space& x,
                                         const std::vector<std::vector<int>>& landmark_sets,
                                         double r, int hom_dim, field_spec f) {
    if (landmark_sets.size() < 2)
        throw tda_error("zigzag", "witness comparison needs at least two landmark sets");
    int max_dim = hom_dim + 1;

    std::vector<homology_basis> bases;
    std::vector<zigzag_arrow> arrows;

    std::vector<homology_basis> witness_bases;
    for (const auto& l : landmark_sets)
        witness_bases.push_back(compute_homology_basis(
            witness(x, l, r, witness_variant::strong, max_dim), hom_dim, f.p));

    for (size_t i = 0; i + 1 < landmark_sets.size(); ++i) {
        auto biv = bivariant_witness(x, landmark_sets[i], landmark_sets[i + 1], r, max_dim);
        homology_basis biv_basis = compute_homology_basis(biv.complex, hom_dim, f.p);

        if (i == 0) bases.push_back(witness_bases[0]);
        auto to_first = [m = biv.to_first](int v) { return m[v]; };
        auto to_second = [m = biv.to_second](int v) { return m[v]; };
        // W(L_i) <- W(L_i, L_{i+1}) -> W(L_{i+1})
        arrows.push_back({false, induced_map(biv_basis, witness_bases[i], to_first)});
        bases.push_back(std::move(biv_basis));
        arrows.push_back({true, induced_map(bases.back(), witness_bases[i + 1], to_second)});
        bases.push_back(witness_bases[i + 1]);
    }

    zigzag_diagram z;
    z.p = f.p;
    for (const auto& b : bases) z.dims.push_back(b.dim_h());
    z.arrows = std::move(arrows);
    z.validate();
    return z;
}

} // namespace tda
