#include "tda/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tda {

double feature_vector::value_of(const std::string& label) const {
    for (const auto& [l, v] : items)
        if (l == label) return v;
    throw tda_error("feature", "no feature labelled " + label);
}

double feature_vector::sum() const {
    double s = 0.0;
    for (const auto& [l, v] : items) s += v;
    return s;
}

feature_vector algebraic_features(const diagram& b,
                                  const std::vector<std::pair<int, int>>& indices) {
    diagram d = canonicalize(b);
    for (const auto& iv : d)
        if (iv.death == infinity)
            throw tda_error("diagram", "algebraic features require a finite diagram");
    feature_vector out;
    for (auto [i, j] : indices) {
        if (i < 1 || j < 0)
            throw tda_error("argument", "algebraic feature indices require i >= 1, j >= 0");
        double sum = 0.0;
        for (const auto& iv : d)
            sum += std::pow(iv.death - iv.birth, i) * std::pow(iv.death + iv.birth, j);
        out.items.emplace_back("x_" + std::to_string(i) + "_" + std::to_string(j), sum);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Landscapes

namespace {

double tent(const interval& iv, double t) {
    return std::max(std::min(t - iv.birth, iv.death - t), 0.0);
}

// k-th largest tent value at t (k is 1-based)
double kth_tent_value(const diagram& d, int k, double t) {
    std::vector<double> vals;
    vals.reserve(d.size());
    for (const auto& iv : d) vals.push_back(tent(iv, t));
    if (k > static_cast<int>(vals.size())) return 0.0;
    std::nth_element(vals.begin(), vals.begin() + (k - 1), vals.end(), std::greater<double>());
    return vals[k - 1];
}

std::vector<landscape_point> compress(std::vector<landscape_point> pts) {
    // drop interior points collinear with their neighbours
    std::vector<landscape_point> out;
    for (const auto& p : pts) {
        while (out.size() >= 2) {
            const auto& a = out[out.size() - 2];
            const auto& m = out.back();
            double span = p.t - a.t;
            if (span <= 0) break;
            double interp = a.v + (m.t - a.t) / span * (p.v - a.v);
            if (std::abs(interp - m.v) <= 1e-12)
                out.pop_back();
            else
                break;
        }
        out.push_back(p);
    }
    // trim flat zero tails, keeping one anchor on each side of the support
    while (out.size() >= 2 && out[0].v == 0.0 && out[1].v == 0.0) out.erase(out.begin());
    while (out.size() >= 2 && out[out.size() - 1].v == 0.0 && out[out.size() - 2].v == 0.0)
        out.pop_back();
    if (out.size() == 1 && out[0].v == 0.0) out.clear();
    return out;
}

} // namespace

landscape build_landscape(const diagram& b, int k_max) {
    if (k_max < 1) throw tda_error("argument", "landscape requires k_max >= 1");
    diagram d = canonicalize(b);
    for (const auto& iv : d)
        if (iv.death == infinity)
            throw tda_error("diagram", "landscape requires a finite diagram");

    landscape out;
    if (d.empty()) return out;

    // slope changes of the k-th max happen at endpoints and at crossings of
    // a rising and a falling tent edge: t = (birth_i + death_j) / 2
    std::vector<double> ts;
    for (const auto& iv : d) {
        ts.push_back(iv.birth);
        ts.push_back(iv.death);
    }
    for (const auto& a : d)
        for (const auto& c : d) ts.push_back(0.5 * (a.birth + c.death));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    int levels = std::min<int>(k_max, static_cast<int>(d.size()));
    for (int k = 1; k <= levels; ++k) {
        std::vector<landscape_point> pts;
        pts.reserve(ts.size());
        for (double t : ts) pts.push_back({t, kth_tent_value(d, k, t)});
        auto level = compress(std::move(pts));
        if (level.empty()) break; // deeper levels are identically zero too
        out.levels.push_back(std::move(level));
    }
    return out;
}

double landscape_eval(const landscape& l, int k, double t) {
    if (k < 1) throw tda_error("argument", "landscape level must be >= 1");
    if (k > l.level_count()) return 0.0;
    const auto& pts = l.levels[k - 1];
    if (pts.empty() || t <= pts.front().t || t >= pts.back().t) {
        // endpoints carry value 0 by construction; outside the support it is 0
        if (!pts.empty() && t == pts.front().t) return pts.front().v;
        if (!pts.empty() && t == pts.back().t) return pts.back().v;
        return 0.0;
    }
    auto it = std::lower_bound(pts.begin(), pts.end(), t,
                               [](const landscape_point& p, double x) { return p.t < x; });
    if (it->t == t) return it->v;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    return lo.v + (t - lo.t) / (hi.t - lo.t) * (hi.v - lo.v);
}

namespace {

double segment_l1(double v0, double v1, double h) {
    double a0 = std::abs(v0), a1 = std::abs(v1);
    if (v0 * v1 >= 0.0) return 0.5 * (a0 + a1) * h;
    return 0.5 * h * (a0 * a0 + a1 * a1) / (a0 + a1);
}

double segment_l2_sq(double v0, double v1, double h) {
    return h * (v0 * v0 + v0 * v1 + v1 * v1) / 3.0;
}

} // namespace

double landscape_distance(const landscape& l1, const landscape& l2, double p) {
    bool sup = std::isinf(p);
    if (!sup && p != 1.0 && p != 2.0)
        throw tda_error("argument", "landscape distance supports p in {1, 2, inf}");

    int levels = std::max(l1.level_count(), l2.level_count());
    double acc = 0.0;
    for (int k = 1; k <= levels; ++k) {
        std::vector<double> ts;
        if (k <= l1.level_count())
            for (const auto& pt : l1.levels[k - 1]) ts.push_back(pt.t);
        if (k <= l2.level_count())
            for (const auto& pt : l2.levels[k - 1]) ts.push_back(pt.t);
        if (ts.empty()) continue;
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

        if (sup) {
            for (double t : ts)
                acc = std::max(acc, std::abs(landscape_eval(l1, k, t) - landscape_eval(l2, k, t)));
            continue;
        }
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
            double h = ts[i + 1] - ts[i];
            if (h <= 0) continue;
            double v0 = landscape_eval(l1, k, ts[i]) - landscape_eval(l2, k, ts[i]);
            double v1 = landscape_eval(l1, k, ts[i + 1]) - landscape_eval(l2, k, ts[i + 1]);
            acc += p == 1.0 ? segment_l1(v0, v1, h) : segment_l2_sq(v0, v1, h);
        }
    }
    if (sup) return acc;
    return p == 1.0 ? acc : std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Persistence images

void image_config::validate() const {
    if (!(xi_max > xi_min) || !(eta_max > eta_min))
        throw tda_error("argument", "image box is degenerate");
    if (n_xi < 1 || n_eta < 1) throw tda_error("argument", "image resolution must be >= 1");
    if (!(sigma > 0.0)) throw tda_error("argument", "image kernel sigma must be positive");
    if (eta_cap && !(*eta_cap > 0.0))
        throw tda_error("argument", "image weight cap must be positive");
}

double image_config::weight_at(double eta) const {
    double cap = eta_cap ? *eta_cap : eta_max;
    switch (weight) {
    case image_weight::linear:
        return std::min(std::max(eta, 0.0) / cap, 1.0);
    }
    return 0.0;
}

namespace {

double gauss_cdf(double z) { return 0.5 * (1.0 + std::erf(z / std::numbers::sqrt2)); }

} // namespace

feature_vector persistence_image(const diagram& b, const image_config& cfg) {
    cfg.validate();
    diagram d = canonicalize(b);
    for (const auto& iv : d)
        if (iv.death == infinity)
            throw tda_error("diagram", "persistence image requires a finite diagram");

    double dxi = (cfg.xi_max - cfg.xi_min) / cfg.n_xi;
    double deta = (cfg.eta_max - cfg.eta_min) / cfg.n_eta;

    feature_vector out;
    out.items.reserve(static_cast<size_t>(cfg.n_xi) * cfg.n_eta);
    for (int ix = 0; ix < cfg.n_xi; ++ix)
        for (int ie = 0; ie < cfg.n_eta; ++ie) {
            double x0 = cfg.xi_min + ix * dxi, x1 = x0 + dxi;
            double e0 = cfg.eta_min + ie * deta, e1 = e0 + deta;
            double pixel = 0.0;
            for (const auto& iv : d) {
                double xi = iv.birth, eta = iv.death - iv.birth;
                double w = cfg.weight_at(eta);
                if (w == 0.0) continue;
                double mass_x = gauss_cdf((x1 - xi) / cfg.sigma) - gauss_cdf((x0 - xi) / cfg.sigma);
                double mass_e = gauss_cdf((e1 - eta) / cfg.sigma) - gauss_cdf((e0 - eta) / cfg.sigma);
                pixel += w * mass_x * mass_e;
            }
            out.items.emplace_back("px_" + std::to_string(ix) + "_" + std::to_string(ie), pixel);
        }
    return out;
}

} // namespace tda
