#include "tda/barcode_space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace tda {

diagram canonicalize(diagram b) {
    std::erase_if(b, [](const interval& iv) { return iv.birth == iv.death; });
    for (const auto& iv : b)
        if (iv.death < iv.birth || iv.birth < 0)
            throw tda_error("diagram", "diagram point with death < birth or negative birth");
    std::sort(b.begin(), b.end());
    return b;
}

diagram diagram_of(const barcode& b, int dim) {
    return canonicalize(b.dim(dim));
}

double matching_penalty(const interval& a, const interval& b) {
    double db;
    if (a.death == infinity && b.death == infinity)
        db = 0.0;
    else if (a.death == infinity || b.death == infinity)
        db = infinity;
    else
        db = std::abs(a.death - b.death);
    return std::max(std::abs(a.birth - b.birth), db);
}

namespace {

struct split_diagram {
    std::vector<interval> finite;
    std::vector<double> infinite_births;
};

split_diagram split(const diagram& b) {
    split_diagram out;
    for (const auto& iv : canonicalize(b)) {
        if (iv.death == infinity)
            out.infinite_births.push_back(iv.birth);
        else
            out.finite.push_back(iv);
    }
    std::sort(out.infinite_births.begin(), out.infinite_births.end());
    return out;
}

double diagonal_cost(const interval& iv) { return 0.5 * (iv.death - iv.birth); }

// Augmented square cost matrix: rows are B1 points then diagonal slots,
// columns are B2 points then diagonal slots.
std::vector<std::vector<double>> augmented_costs(const std::vector<interval>& a,
                                                 const std::vector<interval>& b) {
    size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n1; ++i) {
        for (size_t j = 0; j < n2; ++j) cost[i][j] = matching_penalty(a[i], b[j]);
        for (size_t j = n2; j < n; ++j) cost[i][j] = diagonal_cost(a[i]);
    }
    for (size_t i = n1; i < n; ++i)
        for (size_t j = 0; j < n2; ++j) cost[i][j] = diagonal_cost(b[j]);
    return cost;
}

// Kuhn's algorithm: does the graph of edges {cost <= limit} have a perfect
// matching?
bool threshold_matching_exists(const std::vector<std::vector<double>>& cost, double limit) {
    int n = static_cast<int>(cost.size());
    std::vector<int> match_right(n, -1);
    std::vector<char> visited;
    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int v = 0; v < n; ++v) {
            if (visited[v] || cost[u][v] > limit) continue;
            visited[v] = 1;
            if (match_right[v] < 0 || try_augment(match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < n; ++u) {
        visited.assign(n, 0);
        if (!try_augment(u)) return false;
    }
    return true;
}

// Shortest-augmenting-path assignment with potentials (Jonker-Volgenant
// style); returns the minimum total cost of a perfect matching.
double assignment_cost(const std::vector<std::vector<double>>& cost) {
    int n = static_cast<int>(cost.size());
    if (n == 0) return 0.0;
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0); // match[col 1..n] = row, 0 = free
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> min_slack(n + 1, infinity);
        std::vector<int> prev(n + 1, 0);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = match[j0], j1 = -1;
            double delta = infinity;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < min_slack[j]) {
                    min_slack[j] = cur;
                    prev[j] = j0;
                }
                if (min_slack[j] < delta) {
                    delta = min_slack[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_slack[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            int j1 = prev[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    double total = 0.0;
    for (int j = 1; j <= n; ++j)
        if (match[j] > 0) total += cost[match[j] - 1][j - 1];
    return total;
}

} // namespace

double bottleneck(const diagram& b1, const diagram& b2) {
    split_diagram a = split(b1), b = split(b2);
    if (a.infinite_births.size() != b.infinite_births.size()) return infinity;
    double essential = 0.0;
    for (size_t i = 0; i < a.infinite_births.size(); ++i)
        essential = std::max(essential, std::abs(a.infinite_births[i] - b.infinite_births[i]));
    if (a.finite.empty() && b.finite.empty()) return essential;

    auto cost = augmented_costs(a.finite, b.finite);
    std::vector<double> candidates{0.0};
    for (const auto& row : cost)
        for (double c : row) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (threshold_matching_exists(cost, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(essential, candidates[lo]);
}

double wasserstein(const diagram& b1, const diagram& b2, double p) {
    if (p < 1.0) throw tda_error("argument", "wasserstein requires p >= 1");
    // canonical argument order makes the float result exactly symmetric
    {
        diagram c1 = canonicalize(b1), c2 = canonicalize(b2);
        if (c2 < c1) return wasserstein(c2, c1, p);
    }
    split_diagram a = split(b1), b = split(b2);
    if (a.infinite_births.size() != b.infinite_births.size()) return infinity;
    double total = 0.0;
    for (size_t i = 0; i < a.infinite_births.size(); ++i)
        total += std::pow(std::abs(a.infinite_births[i] - b.infinite_births[i]), p);

    if (!a.finite.empty() || !b.finite.empty()) {
        auto cost = augmented_costs(a.finite, b.finite);
        for (auto& row : cost)
            for (double& c : row) c = std::pow(c, p);
        total += assignment_cost(cost);
    }
    return std::pow(total, 1.0 / p);
}

diagram truncate(const diagram& b, double x) {
    diagram out;
    for (const auto& iv : canonicalize(b)) {
        if (iv.birth >= x) continue;
        out.push_back({iv.birth, std::min(iv.death, x)});
    }
    return canonicalize(out);
}

double total_persistence(const diagram& b, double k) {
    double sum = 0.0;
    for (const auto& iv : canonicalize(b)) {
        if (iv.death == infinity)
            throw tda_error("diagram", "total persistence of an infinite interval");
        sum += std::pow(iv.death - iv.birth, k);
    }
    return sum;
}

double chi_pers(const barcode& bars, double x) {
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k <= bars.max_dim(); ++k) {
        sum += sign * total_persistence(truncate(bars.dim(k), x), 1.0);
        sign = -sign;
    }
    return sum;
}

double lambda_stat(const diagram& b) {
    diagram d = canonicalize(b);
    if (d.empty()) throw tda_error("diagram", "lambda statistic of an empty diagram");
    double best = 0.0;
    for (const auto& iv : d) {
        if (iv.birth <= 0.0)
            throw tda_error("diagram", "lambda statistic requires strictly positive births");
        if (iv.death == infinity)
            throw tda_error("diagram", "lambda statistic requires finite intervals");
        best = std::max(best, iv.death / iv.birth);
    }
    return best;
}

double median_distance_stat(const std::vector<diagram>& samples, const diagram& reference) {
    if (samples.empty()) throw tda_error("argument", "median distance of an empty sample list");
    std::vector<double> dist;
    dist.reserve(samples.size());
    for (const auto& s : samples) dist.push_back(bottleneck(s, reference));
    std::sort(dist.begin(), dist.end());
    // lower median for even counts
    return dist[(dist.size() - 1) / 2];
}

} // namespace tda
