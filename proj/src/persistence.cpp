#include "tda/persistence.hpp"

#include <algorithm>

#include "tda/homology.hpp"

namespace tda {

void barcode::sort() {
    for (auto& bars : by_dim) std::sort(bars.begin(), bars.end());
}

int intervals_containing(const barcode& b, int k, double r) {
    int count = 0;
    for (const auto& iv : b.dim(k))
        if (iv.birth <= r && r < iv.death) ++count;
    return count;
}

namespace {

// sparse column over Z/p; entries sorted by row index, coefficients nonzero
using sparse_column = std::vector<std::pair<int, int>>;

sparse_column add_scaled(const sparse_column& a, const sparse_column& b, int factor, int p) {
    sparse_column out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            int c = fp_mul(factor, b[j].second, p);
            if (c != 0) out.emplace_back(b[j].first, c);
            ++j;
        } else {
            int c = fp_add(a[i].second, fp_mul(factor, b[j].second, p), p);
            if (c != 0) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

persistence_result compute_persistence(const filtered_complex& k, field_spec f, int max_hom_dim) {
    auto violations = k.closure_violations();
    if (!violations.empty())
        throw tda_error("closure", "complex fails closure audit: " + violations.front());
    if (max_hom_dim < 0) throw tda_error("argument", "max_hom_dim must be >= 0");
    const int p = f.p;

    persistence_result result;
    result.filtration = k.entries();
    std::sort(result.filtration.begin(), result.filtration.end(),
              [](const filtered_simplex& a, const filtered_simplex& b) {
                  if (a.value != b.value) return a.value < b.value;
                  if (a.vertices.size() != b.vertices.size())
                      return a.vertices.size() < b.vertices.size();
                  return a.vertices < b.vertices;
              });

    const int n = static_cast<int>(result.filtration.size());
    std::map<simplex, int> index_of;
    for (int i = 0; i < n; ++i) index_of[result.filtration[i].vertices] = i;

    // standard left-to-right column reduction with a pivot -> column lookup
    std::vector<int> owner_of_low(n, -1);
    std::vector<sparse_column> reduced(n);
    std::vector<char> is_positive(n, 0);
    std::vector<int> killer(n, -1);

    for (int j = 0; j < n; ++j) {
        const auto& s = result.filtration[j].vertices;
        int dim = static_cast<int>(s.size()) - 1;
        if (dim > max_hom_dim + 1) continue;
        sparse_column col;
        if (dim > 0) {
            int sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                simplex face;
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != drop) face.push_back(s[t]);
                col.emplace_back(index_of.at(face), fp_normalize(sign, p));
                sign = -sign;
            }
            std::sort(col.begin(), col.end());
        }
        while (!col.empty()) {
            int low = col.back().first;
            int other = owner_of_low[low];
            if (other < 0) break;
            int factor = fp_mul(p - 1, fp_mul(col.back().second,
                                              fp_inv(reduced[other].back().second, p), p), p);
            col = add_scaled(col, reduced[other], factor, p);
        }
        if (col.empty()) {
            is_positive[j] = 1;
        } else {
            int low = col.back().first;
            owner_of_low[low] = j;
            killer[low] = j;
            reduced[j] = std::move(col);
        }
    }

    for (int i = 0; i < n; ++i) {
        int dim = static_cast<int>(result.filtration[i].vertices.size()) - 1;
        if (!is_positive[i] || dim > max_hom_dim) continue;
        double birth = result.filtration[i].value;
        if (killer[i] >= 0) {
            double death = result.filtration[killer[i]].value;
            result.pairs.emplace_back(i, killer[i]);
            if (birth < death) result.bars.add(dim, {birth, death});
        } else {
            result.pairs.emplace_back(i, -1);
            result.bars.add(dim, {birth, infinity});
        }
    }
    if (static_cast<int>(result.bars.by_dim.size()) <= max_hom_dim)
        result.bars.by_dim.resize(max_hom_dim + 1);
    result.bars.sort();
    return result;
}

barcode compute_barcodes(const filtered_complex& k, field_spec f, int max_hom_dim) {
    return compute_persistence(k, f, max_hom_dim).bars;
}

filtered_complex lower_star_filtration(const filtered_complex& k,
                                       const std::map<int, double>& vertex_values) {
    std::vector<filtered_simplex> entries;
    entries.reserve(k.size());
    for (const auto& e : k.entries()) {
        double value = -infinity;
        for (int v : e.vertices) {
            auto it = vertex_values.find(v);
            if (it == vertex_values.end())
                throw tda_error("argument",
                                "lower-star function missing vertex " + std::to_string(v));
            value = std::max(value, it->second);
        }
        entries.push_back({e.vertices, value});
    }
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

int betti_at(const filtered_complex& k, double r, int dim, field_spec f) {
    return betti_number(k.sublevel(r), dim, f.p);
}

bool relative_h_certificate(const filtered_complex& r, const filtered_complex& fsub,
                            field_spec f) {
    std::map<simplex, char> in_sub;
    for (const auto& e : fsub.entries()) {
        if (!r.contains(e.vertices))
            throw tda_error("argument", "claimed subcomplex has a simplex not in the ambient complex");
        in_sub[e.vertices] = 1;
    }
    // two-stage filtration: the subcomplex enters at 0, the rest at 1. The
    // H1 intervals [0, 1) count exactly dim ker(H1(Fsub) -> H1(R)).
    std::vector<filtered_simplex> staged;
    staged.reserve(r.size());
    for (const auto& e : r.entries())
        staged.push_back({e.vertices, in_sub.count(e.vertices) ? 0.0 : 1.0});
    auto bars = compute_barcodes(filtered_complex(std::move(staged)), f, 1);
    for (const auto& iv : bars.dim(1))
        if (iv.birth == 0.0 && iv.death == 1.0) return true;
    return false;
}

filtered_complex bifiltration::sublevel_at(grade x) const {
    std::vector<filtered_simplex> kept;
    for (const auto& e : entries)
        if (e.g.first <= x.first && e.g.second <= x.second) kept.push_back({e.vertices, 0.0});
    filtered_complex out(std::move(kept));
    out.sort_filtration();
    return out;
}

std::vector<std::string> bifiltration::monotonicity_violations() const {
    std::vector<std::string> out;
    std::map<simplex, grade> index;
    for (const auto& e : entries) index[e.vertices] = e.g;
    for (const auto& e : entries) {
        if (e.vertices.size() < 2) continue;
        for (size_t drop = 0; drop < e.vertices.size(); ++drop) {
            simplex face;
            for (size_t t = 0; t < e.vertices.size(); ++t)
                if (t != drop) face.push_back(e.vertices[t]);
            auto it = index.find(face);
            if (it == index.end())
                out.push_back("missing face in bifiltration");
            else if (it->second.first > e.g.first || it->second.second > e.g.second)
                out.push_back("face grade exceeds coface grade");
        }
    }
    return out;
}

std::vector<int> rank_invariant_2d(const bifiltration& b, field_spec f, int hom_dim,
                                   const std::vector<std::pair<grade, grade>>& grid) {
    auto violations = b.monotonicity_violations();
    if (!violations.empty())
        throw tda_error("grades", "bifiltration monotonicity violation: " + violations.front());

    std::vector<int> out;
    out.reserve(grid.size());
    std::map<grade, homology_basis> cache;
    auto basis_at = [&](grade g) -> const homology_basis& {
        auto it = cache.find(g);
        if (it == cache.end())
            it = cache.emplace(g, compute_homology_basis(b.sublevel_at(g), hom_dim, f.p)).first;
        return it->second;
    };

    for (const auto& [x, y] : grid) {
        if (!(x.first <= y.first && x.second <= y.second)) {
            out.push_back(0); // r(x, y) = 0 when x is not <= y
            continue;
        }
        const auto& src = basis_at(x);
        if (src.dim_h() == 0) {
            out.push_back(0);
            continue;
        }
        const auto& dst = basis_at(y);
        out.push_back(induced_map(src, dst, [](int v) { return v; }).rank());
    }
    return out;
}

} // namespace tda
