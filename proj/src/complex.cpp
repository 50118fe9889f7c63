#include "tda/complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace tda {

namespace {

bool strictly_sorted(const simplex& s) {
    for (size_t k = 1; k < s.size(); ++k)
        if (s[k - 1] >= s[k]) return false;
    return !s.empty();
}

} // namespace

filtered_complex::filtered_complex(std::vector<filtered_simplex> entries)
    : entries_(std::move(entries)) {}

int filtered_complex::max_dim() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, static_cast<int>(e.vertices.size()) - 1);
    return d;
}

double filtered_complex::max_value() const {
    double v = 0.0;
    for (const auto& e : entries_) v = std::max(v, e.value);
    return v;
}

int filtered_complex::vertex_count() const {
    int n = 0;
    for (const auto& e : entries_)
        if (e.vertices.size() == 1) ++n;
    return n;
}

void filtered_complex::sort_filtration() {
    std::sort(entries_.begin(), entries_.end(), [](const filtered_simplex& a, const filtered_simplex& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
}

bool filtered_complex::contains(const simplex& s) const {
    return value_of(s).has_value();
}

std::optional<double> filtered_complex::value_of(const simplex& s) const {
    for (const auto& e : entries_)
        if (e.vertices == s) return e.value;
    return std::nullopt;
}

std::vector<std::string> filtered_complex::closure_violations() const {
    std::vector<std::string> out;
    std::map<simplex, double> index;
    for (const auto& e : entries_) {
        if (!strictly_sorted(e.vertices)) {
            out.push_back("malformed simplex (empty or not strictly sorted)");
            continue;
        }
        if (!index.emplace(e.vertices, e.value).second)
            out.push_back("duplicate simplex");
    }
    for (const auto& e : entries_) {
        if (e.vertices.size() < 2) continue;
        for (size_t drop = 0; drop < e.vertices.size(); ++drop) {
            simplex face;
            face.reserve(e.vertices.size() - 1);
            for (size_t k = 0; k < e.vertices.size(); ++k)
                if (k != drop) face.push_back(e.vertices[k]);
            auto it = index.find(face);
            if (it == index.end())
                out.push_back("missing face of a " + std::to_string(e.vertices.size() - 1) +
                              "-simplex");
            else if (it->second > e.value)
                out.push_back("face enters after its coface");
        }
    }
    return out;
}

namespace {

// Raise coface values to their faces' maxima. The geometric constructions
// are monotone exactly; this only absorbs last-ulp rounding of independent
// circumball solves.
void enforce_monotone_closure(std::vector<filtered_simplex>& entries) {
    std::map<simplex, double> value;
    std::stable_sort(entries.begin(), entries.end(),
                     [](const filtered_simplex& a, const filtered_simplex& b) {
                         return a.vertices.size() < b.vertices.size();
                     });
    for (auto& e : entries) {
        if (e.vertices.size() > 1) {
            for (size_t drop = 0; drop < e.vertices.size(); ++drop) {
                simplex face;
                for (size_t t = 0; t < e.vertices.size(); ++t)
                    if (t != drop) face.push_back(e.vertices[t]);
                auto it = value.find(face);
                if (it != value.end()) e.value = std::max(e.value, it->second);
            }
        }
        value[e.vertices] = e.value;
    }
}

} // namespace

filtered_complex filtered_complex::sublevel(double r) const {
    std::vector<filtered_simplex> kept;
    for (const auto& e : entries_)
        if (e.value <= r) kept.push_back(e);
    filtered_complex out(std::move(kept));
    out.sort_filtration();
    return out;
}

filtered_complex filtered_complex::full_subcomplex(const std::vector<int>& vertices) const {
    std::set<int> allowed(vertices.begin(), vertices.end());
    std::vector<filtered_simplex> kept;
    for (const auto& e : entries_) {
        bool inside = true;
        for (int v : e.vertices)
            if (!allowed.count(v)) {
                inside = false;
                break;
            }
        if (inside) kept.push_back(e);
    }
    filtered_complex out(std::move(kept));
    out.sort_filtration();
    return out;
}

// ---------------------------------------------------------------------------
// Vietoris-Rips

namespace {

void rips_expand(const finite_metric_space& x, const std::vector<std::vector<int>>& upper_nbrs,
                 simplex& current, std::vector<int>& candidates, double current_value,
                 int max_dim, std::vector<filtered_simplex>& out) {
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        int v = candidates[idx];
        double value = current_value;
        for (int u : current) value = std::max(value, x(u, v));
        current.push_back(v);
        out.push_back({current, value});
        if (static_cast<int>(current.size()) - 1 < max_dim) {
            std::vector<int> next;
            const auto& nv = upper_nbrs[v];
            for (size_t j = idx + 1; j < candidates.size(); ++j)
                if (std::binary_search(nv.begin(), nv.end(), candidates[j]))
                    next.push_back(candidates[j]);
            rips_expand(x, upper_nbrs, current, next, value, max_dim, out);
        }
        current.pop_back();
    }
}

} // namespace

filtered_complex vietoris_rips(const finite_metric_space& x, double r_max, int max_dim) {
    if (r_max < 0) throw tda_error("argument", "r_max must be >= 0");
    if (max_dim < 0) throw tda_error("argument", "max_dim must be >= 0");
    auto violations = validate_metric(x);
    if (!violations.empty())
        throw tda_error("metric", "invalid metric: " + violations.front().describe());

    int n = x.size();
    std::vector<std::vector<int>> upper(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x(i, j) <= r_max) upper[i].push_back(j);

    std::vector<filtered_simplex> entries;
    for (int v = 0; v < n; ++v) {
        entries.push_back({{v}, 0.0});
        if (max_dim >= 1) {
            simplex current{v};
            std::vector<int> candidates = upper[v];
            rips_expand(x, upper, current, candidates, 0.0, max_dim, entries);
        }
    }
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

// ---------------------------------------------------------------------------
// Cech

namespace {

// Smallest ball through a support set (center constrained to its affine
// hull); nullopt when the support is affinely degenerate.
struct ball {
    std::vector<double> center;
    double radius = 0.0;
};

std::optional<ball> circumball(const std::vector<std::vector<double>>& pts,
                               const std::vector<int>& support) {
    size_t dim = pts.front().size();
    const auto& p0 = pts[support[0]];
    size_t k = support.size() - 1;
    if (k == 0) return ball{p0, 0.0};

    // Gram system: 2 G lambda = rhs with G_ij = (p_i-p_0).(p_j-p_0)
    std::vector<std::vector<double>> a(k, std::vector<double>(k + 1, 0.0));
    for (size_t i = 0; i < k; ++i) {
        const auto& pi = pts[support[i + 1]];
        for (size_t j = 0; j < k; ++j) {
            const auto& pj = pts[support[j + 1]];
            double dot = 0.0;
            for (size_t c = 0; c < dim; ++c) dot += (pi[c] - p0[c]) * (pj[c] - p0[c]);
            a[i][j] = 2.0 * dot;
        }
        double sq = 0.0;
        for (size_t c = 0; c < dim; ++c) sq += (pi[c] - p0[c]) * (pi[c] - p0[c]);
        a[i][k] = sq;
    }
    // Gaussian elimination with partial pivoting
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12) return std::nullopt;
        std::swap(a[col], a[piv]);
        for (size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            for (size_t c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<double> center = p0;
    for (size_t i = 0; i < k; ++i) {
        double lambda = a[i][k] / a[i][i];
        const auto& pi = pts[support[i + 1]];
        for (size_t c = 0; c < dim; ++c) center[c] += lambda * (pi[c] - p0[c]);
    }
    double r = euclidean_distance(center, p0);
    return ball{std::move(center), r};
}

void subsets_of(int n, int k, std::vector<int>& cur, int start,
                const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets_of(n, k, cur, i + 1, emit);
        cur.pop_back();
    }
}

void cech_expand(const std::vector<std::vector<double>>& pts,
                 const std::vector<std::vector<int>>& upper_nbrs, simplex& current,
                 std::vector<int>& candidates, double r_max, int max_dim,
                 std::vector<filtered_simplex>& out) {
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        int v = candidates[idx];
        current.push_back(v);
        std::vector<std::vector<double>> subset;
        for (int u : current) subset.push_back(pts[u]);
        double value = miniball_radius(subset);
        // miniball radius is monotone in the vertex set, so pruning here is safe
        if (value <= r_max) {
            out.push_back({current, value});
            if (static_cast<int>(current.size()) - 1 < max_dim) {
                std::vector<int> next;
                const auto& nv = upper_nbrs[v];
                for (size_t j = idx + 1; j < candidates.size(); ++j)
                    if (std::binary_search(nv.begin(), nv.end(), candidates[j]))
                        next.push_back(candidates[j]);
                cech_expand(pts, upper_nbrs, current, next, r_max, max_dim, out);
            }
        }
        current.pop_back();
    }
}

} // namespace

double miniball_radius(const std::vector<std::vector<double>>& pts) {
    if (pts.empty()) throw tda_error("argument", "miniball of empty set");
    if (pts.size() > 4) throw tda_error("argument", "miniball support enumeration handles <= 4 points");
    int n = static_cast<int>(pts.size());
    // every valid enclosing circumball bounds the optimum from above, and
    // the optimum's own support appears among the subsets, so the minimum
    // over valid candidates is exact
    double best = -1.0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> cur;
        subsets_of(n, k, cur, 0, [&](const std::vector<int>& support) {
            auto b = circumball(pts, support);
            if (!b) return;
            for (int i = 0; i < n; ++i)
                if (euclidean_distance(pts[i], b->center) > b->radius * (1.0 + 1e-12) + 1e-14)
                    return;
            if (best < 0 || b->radius < best) best = b->radius;
        });
    }
    if (best < 0) throw tda_error("geometry", "minimum enclosing ball not found (degenerate input)");
    return best;
}

filtered_complex cech(const point_cloud& pc, double r_max, int max_dim) {
    if (pc.points.empty()) throw tda_error("argument", "point cloud is empty");
    if (pc.dim() > 3) throw tda_error("argument", "cech supports ambient dimension <= 3");
    if (max_dim > pc.dim() + 1)
        throw tda_error("argument", "cech max_dim must be <= ambient dimension + 1");
    if (r_max < 0) throw tda_error("argument", "r_max must be >= 0");
    for (const auto& p : pc.points)
        if (static_cast<int>(p.size()) != pc.dim())
            throw tda_error("metric", "dimension mismatch among points");

    int n = static_cast<int>(pc.points.size());
    std::vector<std::vector<int>> upper(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (euclidean_distance(pc.points[i], pc.points[j]) <= 2.0 * r_max)
                upper[i].push_back(j);

    std::vector<filtered_simplex> entries;
    for (int v = 0; v < n; ++v) {
        entries.push_back({{v}, 0.0});
        if (max_dim >= 1) {
            simplex current{v};
            std::vector<int> candidates = upper[v];
            cech_expand(pc.points, upper, current, candidates, r_max, max_dim, entries);
        }
    }
    enforce_monotone_closure(entries);
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

bool check_interleaving(const point_cloud& pc, double r, int max_dim) {
    auto key_set = [](const filtered_complex& k) {
        std::set<simplex> s;
        for (const auto& e : k.entries()) s.insert(e.vertices);
        return s;
    };
    auto subset = [](const std::set<simplex>& a, const std::set<simplex>& b) {
        for (const auto& s : a)
            if (!b.count(s)) return false;
        return true;
    };
    auto metric = euclidean_metric(pc);
    auto cech_r = key_set(cech(pc, r, max_dim));
    auto vr_r = key_set(vietoris_rips(metric, r, max_dim));
    auto vr_2r = key_set(vietoris_rips(metric, 2.0 * r, max_dim));
    return subset(cech_r, vr_2r) && subset(vr_r, cech_r);
}

// ---------------------------------------------------------------------------
// Alpha complex (planar)

namespace {

constexpr double alpha_tie_tol = 1e-9;

struct bisector_interval {
    bool feasible = true;
    double lo = -infinity;
    double hi = infinity;
    std::vector<int> active_lo; // constraint points attaining the bound
    std::vector<int> active_hi;
};

// Feasible parameter range along the bisector of (i,j) where the point is no
// closer to any other site; parameter t measured from the midpoint.
std::optional<std::pair<std::vector<double>, double>> circumcircle(
    const std::vector<std::vector<double>>& pts, int i, int j, int k);

bisector_interval edge_feasible(const std::vector<std::vector<double>>& pts, int i, int j) {
    bisector_interval iv;
    const auto& pi = pts[i];
    const auto& pj = pts[j];
    double mx = 0.5 * (pi[0] + pj[0]), my = 0.5 * (pi[1] + pj[1]);
    double ex = pj[0] - pi[0], ey = pj[1] - pi[1];
    double len = std::hypot(ex, ey);
    double nx = -ey / len, ny = ex / len;
    for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
        if (k == i || k == j) continue;
        double qx = pts[k][0] - pi[0], qy = pts[k][1] - pi[1];
        double a = -2.0 * (nx * qx + ny * qy);
        double b = 2.0 * ((mx - pi[0]) * qx + (my - pi[1]) * qy) - (qx * qx + qy * qy);
        if (std::abs(a) < 1e-12) {
            if (b > alpha_tie_tol) {
                iv.feasible = false;
                return iv;
            }
            continue;
        }
        double bound = b / a;
        if (a > 0) {
            if (bound > iv.lo + alpha_tie_tol) {
                iv.lo = bound;
                iv.active_lo = {k};
            } else if (bound > iv.lo - alpha_tie_tol) {
                iv.active_lo.push_back(k);
            }
        } else {
            if (bound < iv.hi - alpha_tie_tol) {
                iv.hi = bound;
                iv.active_hi = {k};
            } else if (bound < iv.hi + alpha_tie_tol) {
                iv.active_hi.push_back(k);
            }
        }
    }
    if (iv.lo > iv.hi + alpha_tie_tol) iv.feasible = false;
    return iv;
}

std::optional<std::pair<std::vector<double>, double>> circumcircle(
    const std::vector<std::vector<double>>& pts, int i, int j, int k) {
    double ax = pts[i][0], ay = pts[i][1];
    double bx = pts[j][0], by = pts[j][1];
    double cx = pts[k][0], cy = pts[k][1];
    double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if (std::abs(d) < 1e-12) return std::nullopt; // collinear
    double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    double r = std::hypot(ax - ux, ay - uy);
    return std::make_pair(std::vector<double>{ux, uy}, r);
}

} // namespace

filtered_complex alpha_complex_2d(const point_cloud& pc) {
    if (pc.dim() != 2) throw tda_error("argument", "alpha complex requires planar points");
    int n = static_cast<int>(pc.points.size());
    if (n == 0) throw tda_error("argument", "point cloud is empty");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (euclidean_distance(pc.points[i], pc.points[j]) == 0.0)
                throw tda_error("geometry", "coincident points in alpha complex input");

    std::vector<filtered_simplex> entries;
    for (int v = 0; v < n; ++v) entries.push_back({{v}, 0.0});

    // Edges: Voronoi cells of i and j share a point iff the feasible interval
    // is nonempty; the entrance value is the distance to i from the feasible
    // point nearest the midpoint. Cocircular ties are broken by preferring
    // the lexicographically smaller pair, one valid Delaunay refinement.
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto iv = edge_feasible(pc.points, i, j);
            if (!iv.feasible) continue;
            if (iv.hi - iv.lo <= alpha_tie_tol && !iv.active_lo.empty() && !iv.active_hi.empty()) {
                // degenerate (cocircular) shared point; competing diagonal
                int a = *std::min_element(iv.active_lo.begin(), iv.active_lo.end());
                int b = *std::min_element(iv.active_hi.begin(), iv.active_hi.end());
                std::pair<int, int> rival{std::min(a, b), std::max(a, b)};
                if (rival < std::make_pair(i, j)) continue;
            }
            double t = std::clamp(0.0, iv.lo, iv.hi);
            double half = 0.5 * euclidean_distance(pc.points[i], pc.points[j]);
            double value = std::hypot(t, half);
            if (t != 0.0) {
                // the nearest feasible bisector point is a Voronoi vertex:
                // reuse the circumradius of the adjacent Delaunay triangle so
                // the edge and its killing triangle enter at the same double
                const auto& active = t == iv.lo ? iv.active_lo : iv.active_hi;
                if (!active.empty()) {
                    int blocker = *std::min_element(active.begin(), active.end());
                    int tri[3] = {i, j, blocker};
                    std::sort(tri, tri + 3);
                    if (auto cc = circumcircle(pc.points, tri[0], tri[1], tri[2]))
                        value = cc->second;
                }
            }
            entries.push_back({{i, j}, value});
            edges.insert({i, j});
        }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!edges.count({i, j}) || !edges.count({i, k}) || !edges.count({j, k})) continue;
                auto cc = circumcircle(pc.points, i, j, k);
                if (!cc) continue;
                bool blocked = false;
                for (int l = 0; l < n && !blocked; ++l) {
                    if (l == i || l == j || l == k) continue;
                    if (euclidean_distance(pc.points[l], cc->first) < cc->second - alpha_tie_tol)
                        blocked = true;
                }
                if (!blocked) entries.push_back({{i, j, k}, cc->second});
            }

    enforce_monotone_closure(entries);
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

// ---------------------------------------------------------------------------
// Witness complexes

namespace {

// min over witnesses x of (max_i d(x, l_i) - m_x); nonnegative by choice of m_x
double strong_witness_value(const finite_metric_space& x, const std::vector<double>& m,
                            const std::vector<int>& landmark_points) {
    double best = infinity;
    for (int w = 0; w < x.size(); ++w) {
        double worst = 0.0;
        for (int l : landmark_points) worst = std::max(worst, x(w, l));
        best = std::min(best, worst - m[w]);
    }
    return std::max(best, 0.0);
}

void witness_expand(const finite_metric_space& x, const std::vector<double>& m,
                    const std::vector<int>& landmarks,
                    const std::vector<std::vector<int>>& upper_nbrs, simplex& current,
                    std::vector<int>& candidates, double r_max, int max_dim,
                    std::vector<filtered_simplex>& out) {
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        int v = candidates[idx];
        current.push_back(v);
        std::vector<int> pts;
        for (int u : current) pts.push_back(landmarks[u]);
        double value = strong_witness_value(x, m, pts);
        if (value <= r_max) {
            out.push_back({current, value});
            if (static_cast<int>(current.size()) - 1 < max_dim) {
                std::vector<int> next;
                const auto& nv = upper_nbrs[v];
                for (size_t j = idx + 1; j < candidates.size(); ++j)
                    if (std::binary_search(nv.begin(), nv.end(), candidates[j]))
                        next.push_back(candidates[j]);
                witness_expand(x, m, landmarks, upper_nbrs, current, next, r_max, max_dim, out);
            }
        }
        current.pop_back();
    }
}

// Flag-complete a set of weighted edges: higher simplices at max edge value.
void flag_expand(const std::vector<std::vector<std::pair<int, double>>>& wadj, simplex& current,
                 std::vector<int>& candidates, double current_value, int max_dim,
                 std::vector<filtered_simplex>& out) {
    for (size_t idx = 0; idx < candidates.size(); ++idx) {
        int v = candidates[idx];
        double value = current_value;
        for (int u : current) {
            for (const auto& [w, d] : wadj[u])
                if (w == v) {
                    value = std::max(value, d);
                    break;
                }
        }
        current.push_back(v);
        out.push_back({current, value});
        if (static_cast<int>(current.size()) - 1 < max_dim) {
            std::vector<int> next;
            for (size_t j = idx + 1; j < candidates.size(); ++j) {
                int cand = candidates[j];
                for (const auto& [w, d] : wadj[v])
                    if (w == cand) {
                        next.push_back(cand);
                        break;
                    }
            }
            flag_expand(wadj, current, next, value, max_dim, out);
        }
        current.pop_back();
    }
}

filtered_complex flag_from_edges(int n_vertices,
                                 const std::vector<std::tuple<int, int, double>>& edge_list,
                                 int max_dim) {
    std::vector<filtered_simplex> entries;
    std::vector<std::vector<std::pair<int, double>>> wadj(n_vertices);
    for (auto [u, v, d] : edge_list) {
        wadj[u].emplace_back(v, d);
        wadj[v].emplace_back(u, d);
    }
    for (auto& lst : wadj) std::sort(lst.begin(), lst.end());
    for (int v = 0; v < n_vertices; ++v) {
        entries.push_back({{v}, 0.0});
        if (max_dim >= 1) {
            simplex current{v};
            std::vector<int> candidates;
            for (const auto& [w, d] : wadj[v])
                if (w > v) candidates.push_back(w);
            flag_expand(wadj, current, candidates, 0.0, max_dim, entries);
        }
    }
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

} // namespace

filtered_complex witness(const finite_metric_space& x, const std::vector<int>& landmarks,
                         double r_max, witness_variant variant, int max_dim) {
    if (landmarks.empty()) throw tda_error("argument", "landmark set is empty");
    for (int l : landmarks)
        if (l < 0 || l >= x.size()) throw tda_error("argument", "landmark index out of range");
    int nl = static_cast<int>(landmarks.size());

    std::vector<double> m(x.size(), infinity);
    for (int w = 0; w < x.size(); ++w)
        for (int l : landmarks) m[w] = std::min(m[w], x(w, l));

    if (variant == witness_variant::weak) {
        if (nl < 2)
            throw tda_error("argument", "weak witness complex requires at least two landmarks");
        std::vector<double> delta(x.size());
        for (int w = 0; w < x.size(); ++w) {
            double first = infinity, second = infinity;
            for (int l : landmarks) {
                double d = x(w, l);
                if (d < first) {
                    second = first;
                    first = d;
                } else if (d < second) {
                    second = d;
                }
            }
            delta[w] = second;
        }
        std::vector<std::tuple<int, int, double>> edge_list;
        for (int a = 0; a < nl; ++a)
            for (int b = a + 1; b < nl; ++b) {
                double best = infinity;
                for (int w = 0; w < x.size(); ++w)
                    best = std::min(best,
                                    std::max(x(w, landmarks[a]), x(w, landmarks[b])) - delta[w]);
                best = std::max(best, 0.0);
                if (best <= r_max) edge_list.emplace_back(a, b, best);
            }
        return flag_from_edges(nl, edge_list, max_dim);
    }

    // strong edges are shared by the strong and lazy variants
    std::vector<std::tuple<int, int, double>> edge_list;
    for (int a = 0; a < nl; ++a)
        for (int b = a + 1; b < nl; ++b) {
            double v = strong_witness_value(x, m, {landmarks[a], landmarks[b]});
            if (v <= r_max) edge_list.emplace_back(a, b, v);
        }

    if (variant == witness_variant::lazy) return flag_from_edges(nl, edge_list, max_dim);

    std::vector<std::vector<int>> upper(nl);
    for (auto [a, b, v] : edge_list) upper[a].push_back(b);
    for (auto& lst : upper) std::sort(lst.begin(), lst.end());

    std::vector<filtered_simplex> entries;
    for (int v = 0; v < nl; ++v) {
        entries.push_back({{v}, 0.0});
        if (max_dim >= 1) {
            simplex current{v};
            std::vector<int> candidates = upper[v];
            witness_expand(x, m, landmarks, upper, current, candidates, r_max, max_dim, entries);
        }
    }
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

// ---------------------------------------------------------------------------
// Nerve

namespace {

void nerve_expand(const std::vector<std::vector<int>>& blocks, simplex& current,
                  std::vector<int>& common, int max_dim, std::vector<filtered_simplex>& out) {
    int start = current.back() + 1;
    if (static_cast<int>(current.size()) - 1 >= max_dim) return;
    for (int b = start; b < static_cast<int>(blocks.size()); ++b) {
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), blocks[b].begin(), blocks[b].end(),
                              std::back_inserter(next));
        if (next.empty()) continue;
        current.push_back(b);
        out.push_back({current, 0.0});
        nerve_expand(blocks, current, next, max_dim, out);
        current.pop_back();
    }
}

} // namespace

bool cover::covers_ground() const {
    std::vector<bool> seen(ground_size, false);
    for (const auto& b : blocks)
        for (int v : b)
            if (v >= 0 && v < ground_size) seen[v] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

filtered_complex nerve(const cover& c, int max_dim) {
    std::vector<std::vector<int>> blocks = c.blocks;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::vector<filtered_simplex> entries;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        entries.push_back({{b}, 0.0});
        simplex current{b};
        std::vector<int> common = blocks[b];
        nerve_expand(blocks, current, common, max_dim, entries);
    }
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

// ---------------------------------------------------------------------------
// Bivariant witness

namespace {

// least R at which some single witness certifies both projected simplices
double bivariant_value(const finite_metric_space& x, const std::vector<double>& m1,
                       const std::vector<double>& m2, const std::vector<int>& pts1,
                       const std::vector<int>& pts2) {
    double best = infinity;
    for (int w = 0; w < x.size(); ++w) {
        double worst1 = 0.0, worst2 = 0.0;
        for (int l : pts1) worst1 = std::max(worst1, x(w, l));
        for (int l : pts2) worst2 = std::max(worst2, x(w, l));
        best = std::min(best, std::max(worst1 - m1[w], worst2 - m2[w]));
    }
    return std::max(best, 0.0);
}

} // namespace

bivariant_witness_result bivariant_witness(const finite_metric_space& x,
                                           const std::vector<int>& l1,
                                           const std::vector<int>& l2, double r, int max_dim) {
    if (l1.empty() || l2.empty()) throw tda_error("argument", "landmark set is empty");
    std::vector<double> m1(x.size(), infinity), m2(x.size(), infinity);
    for (int w = 0; w < x.size(); ++w) {
        for (int l : l1) m1[w] = std::min(m1[w], x(w, l));
        for (int l : l2) m2[w] = std::min(m2[w], x(w, l));
    }

    bivariant_witness_result result;
    int n2 = static_cast<int>(l2.size());
    std::vector<int> vertex_id(l1.size() * l2.size(), -1);
    std::vector<filtered_simplex> entries;
    for (int a = 0; a < static_cast<int>(l1.size()); ++a)
        for (int b = 0; b < n2; ++b) {
            double v = bivariant_value(x, m1, m2, {l1[a]}, {l2[b]});
            if (v <= r) {
                int id = static_cast<int>(result.pairs.size());
                vertex_id[static_cast<size_t>(a) * n2 + b] = id;
                result.pairs.emplace_back(a, b);
                result.to_first.push_back(a);
                result.to_second.push_back(b);
                entries.push_back({{id}, v});
            }
        }

    int np = static_cast<int>(result.pairs.size());
    auto value_of_set = [&](const simplex& s) {
        std::vector<int> pts1, pts2;
        for (int id : s) {
            pts1.push_back(l1[result.pairs[id].first]);
            pts2.push_back(l2[result.pairs[id].second]);
        }
        return bivariant_value(x, m1, m2, pts1, pts2);
    };

    // value is monotone in the vertex set, so expand only present faces
    std::vector<std::vector<int>> upper(np);
    std::vector<std::vector<filtered_simplex>> by_dim(std::max(max_dim + 1, 1));
    for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np && max_dim >= 1; ++b) {
            double v = value_of_set({a, b});
            if (v <= r) {
                upper[a].push_back(b);
                by_dim[1].push_back({{a, b}, v});
            }
        }
    for (int d = 2; d <= max_dim; ++d) {
        for (const auto& f : by_dim[d - 1]) {
            int last = f.vertices.back();
            for (int cand : upper[last]) {
                simplex s = f.vertices;
                s.push_back(cand);
                bool edges_ok = true;
                for (int u : s)
                    if (u != cand &&
                        !std::binary_search(upper[u].begin(), upper[u].end(), cand)) {
                        edges_ok = false;
                        break;
                    }
                if (!edges_ok) continue;
                double v = value_of_set(s);
                if (v <= r) by_dim[d].push_back({std::move(s), v});
            }
        }
    }
    for (int d = 1; d < static_cast<int>(by_dim.size()); ++d)
        for (auto& e : by_dim[d]) entries.push_back(std::move(e));

    result.complex = filtered_complex(std::move(entries));
    result.complex.sort_filtration();
    return result;
}

} // namespace tda
