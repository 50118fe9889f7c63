#include "tda/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "tda/homology.hpp"

namespace tda {

namespace {

// Flag complex of an abstract graph via the Vietoris-Rips constructor on a
// two-valued metric (edge = 1, non-edge = 2 keeps the triangle inequality).
filtered_complex detection_flag_complex(int n, const std::vector<std::pair<int, int>>& edges,
                                        int max_dim) {
    finite_metric_space m(n, std::vector<double>(static_cast<size_t>(n) * n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.set(i, j, 2.0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw tda_error("argument", "detection edge index out of range");
        if (a == b) throw tda_error("argument", "detection edges must be irreflexive");
        m.set(a, b, 1.0);
    }
    return vietoris_rips(m, 1.0, max_dim);
}

} // namespace

coverage_report verify_coverage(const sensor_input& s, field_spec f) {
    if (s.n <= 0) throw tda_error("argument", "sensor input has no sensors");
    coverage_report report;

    std::set<int> fence_set(s.fence.begin(), s.fence.end());
    bool fence_valid = fence_set.size() == s.fence.size() && !s.fence.empty();
    for (int v : s.fence)
        if (v < 0 || v >= s.n) fence_valid = false;
    report.checks.push_back({"fence ids distinct and in range", fence_valid, ""});
    if (!fence_valid) throw tda_error("argument", "fence ids invalid");

    std::set<std::pair<int, int>> edge_set;
    for (auto [a, b] : s.edges) edge_set.insert({std::min(a, b), std::max(a, b)});

    bool fence_cycle = s.fence.size() >= 3;
    std::string missing;
    for (size_t i = 0; i < s.fence.size(); ++i) {
        int a = s.fence[i], b = s.fence[(i + 1) % s.fence.size()];
        if (!edge_set.count({std::min(a, b), std::max(a, b)})) {
            fence_cycle = false;
            missing = "fence nodes " + std::to_string(a) + " and " + std::to_string(b) +
                      " are not within detection range";
        }
    }
    report.checks.push_back(
        {"each fence node detects its fence neighbours", fence_cycle, missing});

    double lower = s.detection_radius / std::sqrt(3.0);
    bool radius_ok = s.cover_radius >= lower - 1e-12;
    report.checks.push_back({"cover radius >= detection radius / sqrt(3)", radius_ok,
                             radius_ok ? "" : "cover radius too small for the comparison bound"});

    report.hypotheses_ok = fence_valid && fence_cycle && radius_ok;

    // 3-simplices are kept so that H_2 of the flag complex is correct; the
    // certificate itself uses the kernel formulation on H_1 of the pair.
    filtered_complex rips = detection_flag_complex(s.n, s.edges, 3);

    // the fence subcomplex is the boundary cycle: fence vertices plus the
    // detection edges between cyclic neighbours
    std::vector<filtered_simplex> fence_entries;
    for (int v : s.fence) fence_entries.push_back({{v}, 0.0});
    for (size_t i = 0; i < s.fence.size(); ++i) {
        int a = s.fence[i], b = s.fence[(i + 1) % s.fence.size()];
        if (a == b) continue;
        simplex e{std::min(a, b), std::max(a, b)};
        if (edge_set.count({e[0], e[1]})) fence_entries.push_back({e, 0.0});
    }
    std::sort(fence_entries.begin(), fence_entries.end(),
              [](const filtered_simplex& a, const filtered_simplex& b) {
                  return a.vertices < b.vertices;
              });
    fence_entries.erase(std::unique(fence_entries.begin(), fence_entries.end(),
                                    [](const filtered_simplex& a, const filtered_simplex& b) {
                                        return a.vertices == b.vertices;
                                    }),
                        fence_entries.end());
    filtered_complex fence_subcomplex(std::move(fence_entries));
    fence_subcomplex.sort_filtration();

    report.certificate = relative_h_certificate(rips, fence_subcomplex, f);
    if (report.certificate)
        report.witness_description =
            "a fence 1-cycle class bounds in the full detection complex, so it is the "
            "boundary image of a relative 2-class of the pair";
    return report;
}

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

} // namespace

deployment simulate_deployment(double width, double height, int n_interior, double r, double r_c,
                               unsigned long long seed) {
    if (width <= 0 || height <= 0) throw tda_error("argument", "degenerate domain");
    if (r <= 0 || r_c <= 0) throw tda_error("argument", "radii must be positive");

    deployment out;
    out.input.detection_radius = r;
    out.input.cover_radius = r_c;

    // fence nodes around the rectangle, spacing strictly below R
    double spacing = 0.9 * r;
    auto walk_side = [&](double x0, double y0, double x1, double y1) {
        double len = std::hypot(x1 - x0, y1 - y0);
        int steps = std::max(1, static_cast<int>(std::ceil(len / spacing)));
        for (int k = 0; k < steps; ++k) {
            double t = static_cast<double>(k) / steps;
            out.positions.push_back({x0 + t * (x1 - x0), y0 + t * (y1 - y0)});
            out.input.fence.push_back(static_cast<int>(out.positions.size()) - 1);
        }
    };
    walk_side(0, 0, width, 0);
    walk_side(width, 0, width, height);
    walk_side(width, height, 0, height);
    walk_side(0, height, 0, 0);

    std::mt19937_64 rng(seed);
    for (int k = 0; k < n_interior; ++k)
        out.positions.push_back({uniform01(rng) * width, uniform01(rng) * height});

    out.input.n = static_cast<int>(out.positions.size());
    for (int i = 0; i < out.input.n; ++i)
        for (int j = i + 1; j < out.input.n; ++j) {
            double d = std::hypot(out.positions[i][0] - out.positions[j][0],
                                  out.positions[i][1] - out.positions[j][1]);
            if (d <= r) out.input.edges.emplace_back(i, j);
        }

    // ground truth on a fine grid
    double step = r_c / 6.0;
    int nx = static_cast<int>(std::ceil(width / step)) + 1;
    int ny = static_cast<int>(std::ceil(height / step)) + 1;
    out.ground_truth_covered = true;
    for (int ix = 0; ix < nx && out.ground_truth_covered; ++ix)
        for (int iy = 0; iy < ny; ++iy) {
            double px = std::min(width, ix * step), py = std::min(height, iy * step);
            bool covered = false;
            for (const auto& pos : out.positions)
                if (std::hypot(pos[0] - px, pos[1] - py) <= r_c) {
                    covered = true;
                    break;
                }
            if (!covered) {
                out.ground_truth_covered = false;
                break;
            }
        }
    return out;
}

} // namespace tda
