#include "tda/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace tda {

namespace {

const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

const char* color_for(int dim) { return palette[dim % 6]; }

std::string num(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

std::string svg_open(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
}

double finite_max_value(const barcode& b) {
    double m = 0.0;
    for (int k = 0; k <= b.max_dim(); ++k)
        for (const auto& iv : b.dim(k)) {
            m = std::max(m, iv.birth);
            if (iv.death != infinity) m = std::max(m, iv.death);
        }
    return m > 0 ? m : 1.0;
}

} // namespace

std::string svg_barcode(const barcode& b) {
    int total = 0;
    for (int k = 0; k <= b.max_dim(); ++k) total += static_cast<int>(b.dim(k).size());
    double width = 640, margin = 40, row = 14;
    double height = 2 * margin + std::max(1, total) * row;
    double top = finite_max_value(b) * 1.05;
    auto sx = [&](double v) { return margin + (width - 2 * margin) * v / top; };

    std::string out = svg_open(width, height);
    out += "<line x1=\"" + num(margin) + "\" y1=\"" + num(height - margin) + "\" x2=\"" +
           num(width - margin) + "\" y2=\"" + num(height - margin) +
           "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    int idx = 0;
    for (int k = 0; k <= b.max_dim(); ++k)
        for (const auto& iv : b.dim(k)) {
            double y = margin + idx * row;
            double x0 = sx(iv.birth);
            double x1 = iv.death == infinity ? width - margin : sx(iv.death);
            out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x1) +
                   "\" y2=\"" + num(y) + "\" stroke=\"" + color_for(k) +
                   "\" stroke-width=\"6\"/>\n";
            if (iv.death == infinity)
                out += "<text x=\"" + num(x1 + 2) + "\" y=\"" + num(y + 4) +
                       "\" font-size=\"10\">&#8734;</text>\n";
            ++idx;
        }
    out += "</svg>\n";
    return out;
}

std::string svg_diagram(const barcode& b) {
    double size = 480, margin = 45;
    double top = finite_max_value(b) * 1.1;
    auto sx = [&](double v) { return margin + (size - 2 * margin) * v / top; };
    auto sy = [&](double v) { return size - margin - (size - 2 * margin) * v / top; };

    std::string out = svg_open(size, size);
    out += "<line x1=\"" + num(sx(0)) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" + num(sx(top)) +
           "\" y2=\"" + num(sy(top)) + "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    for (int k = 0; k <= b.max_dim(); ++k)
        for (const auto& iv : b.dim(k)) {
            double death = iv.death == infinity ? top : iv.death;
            out += "<circle cx=\"" + num(sx(iv.birth)) + "\" cy=\"" + num(sy(death)) +
                   "\" r=\"4\" fill=\"" + color_for(k) + "\"";
            if (iv.death == infinity) out += " stroke=\"#000\"";
            out += "/>\n";
        }
    out += "</svg>\n";
    return out;
}

std::string svg_landscape(const landscape& l) {
    double width = 640, height = 320, margin = 40;
    double t_min = 0, t_max = 1, v_max = 1;
    for (const auto& level : l.levels)
        for (const auto& p : level) {
            t_min = std::min(t_min, p.t);
            t_max = std::max(t_max, p.t);
            v_max = std::max(v_max, p.v);
        }
    auto sx = [&](double t) { return margin + (width - 2 * margin) * (t - t_min) / (t_max - t_min); };
    auto sy = [&](double v) { return height - margin - (height - 2 * margin) * v / v_max; };

    std::string out = svg_open(width, height);
    out += "<line x1=\"" + num(margin) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" +
           num(width - margin) + "\" y2=\"" + num(sy(0)) + "\" stroke=\"#444\"/>\n";
    for (size_t k = 0; k < l.levels.size(); ++k) {
        std::string pts;
        for (const auto& p : l.levels[k])
            pts += num(sx(p.t)) + "," + num(sy(p.v)) + " ";
        out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
               color_for(static_cast<int>(k)) + "\" stroke-width=\"2\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string svg_mapper(const mapper_graph& g) {
    double width = 640, height = 480, margin = 50;
    int max_interval = 0;
    std::map<int, int> per_interval;
    std::map<int, std::pair<int, int>> slot; // node -> (interval, offset)
    for (const auto& n : g.nodes) {
        slot[n.id] = {n.interval_index, per_interval[n.interval_index]++};
        max_interval = std::max(max_interval, n.interval_index);
    }
    int max_offset = 0;
    for (auto& [k, v] : per_interval) max_offset = std::max(max_offset, v);
    auto pos = [&](int id) {
        auto [iv, off] = slot[id];
        double x = margin + (width - 2 * margin) * (max_interval ? static_cast<double>(iv) / max_interval : 0.5);
        double y = margin + (height - 2 * margin) *
                                (max_offset > 1 ? static_cast<double>(off) / (max_offset - 1) : 0.5);
        return std::make_pair(x, y);
    };

    std::string out = svg_open(width, height);
    for (auto [a, b] : g.edges()) {
        auto [x1, y1] = pos(a);
        auto [x2, y2] = pos(b);
        out += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
               "\" y2=\"" + num(y2) + "\" stroke=\"#888\" stroke-width=\"2\"/>\n";
    }
    for (const auto& n : g.nodes) {
        auto [x, y] = pos(n.id);
        double r = 6 + 2 * std::sqrt(static_cast<double>(n.members.size()));
        out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) +
               "\" fill=\"" + color_for(n.interval_index) + "\" fill-opacity=\"0.8\"/>\n";
        out += "<text x=\"" + num(x) + "\" y=\"" + num(y + 3) +
               "\" font-size=\"9\" text-anchor=\"middle\">" + std::to_string(n.id) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace tda
