#include "tda/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tda {

std::string format_real(double v) {
    if (v == infinity) return "inf";
    if (v == -infinity) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_real(const std::string& token) {
    if (token == "inf" || token == "+inf") return infinity;
    if (token == "-inf") return -infinity;
    size_t used = 0;
    double v;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw tda_error("io", "bad numeric token '" + token + "'");
    }
    if (used != token.size()) throw tda_error("io", "bad numeric token '" + token + "'");
    return v;
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw tda_error("io", "cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw tda_error("io", "write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw tda_error("io", "cannot replace " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tda_error("io", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::vector<double>> parse_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        std::vector<double> row;
        row.reserve(tokens.size());
        for (const auto& t : tokens) row.push_back(parse_real(t));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

point_cloud parse_point_cloud_csv(const std::string& text) {
    point_cloud pc;
    pc.points = parse_rows(text);
    if (pc.points.empty()) throw tda_error("io", "point cloud file is empty");
    for (const auto& p : pc.points)
        if (p.size() != pc.points.front().size())
            throw tda_error("io", "point rows have differing dimensions");
    return pc;
}

std::string write_point_cloud_csv(const point_cloud& pc) {
    std::string out;
    for (const auto& p : pc.points) {
        for (size_t k = 0; k < p.size(); ++k) {
            if (k) out += ',';
            out += format_real(p[k]);
        }
        out += '\n';
    }
    return out;
}

finite_metric_space parse_distance_csv(const std::string& text) {
    auto rows = parse_rows(text);
    if (rows.empty()) throw tda_error("io", "distance file is empty");
    size_t n = rows.size();
    bool full = true, lower = true;
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) full = false;
        if (rows[i].size() != i + 1) lower = false;
    }
    if (!full && !lower)
        throw tda_error("io", "distance file is neither square nor lower-triangular");
    finite_metric_space x(static_cast<int>(n),
                          std::vector<double>(n * n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) {
            double v = rows[i][j];
            if (full && rows[j][i] != v)
                throw tda_error("io", "distance matrix is not symmetric");
            x.set(static_cast<int>(i), static_cast<int>(j), v);
        }
    auto violations = validate_metric(x);
    if (!violations.empty())
        throw tda_error("metric", "distance file: " + violations.front().describe());
    return x;
}

std::string write_distance_csv(const finite_metric_space& x) {
    std::string out;
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < x.size(); ++j) {
            if (j) out += ',';
            out += format_real(x(i, j));
        }
        out += '\n';
    }
    return out;
}

bool looks_like_distance_matrix(const std::string& text) {
    auto rows = parse_rows(text);
    if (rows.empty()) return false;
    size_t n = rows.size();
    bool lower = n > 1;
    for (size_t i = 0; i < n; ++i)
        if (rows[i].size() != i + 1) lower = false;
    if (lower) return true;
    for (const auto& r : rows)
        if (r.size() != n) return false;
    for (size_t i = 0; i < n; ++i) {
        if (rows[i][i] != 0.0) return false;
        for (size_t j = 0; j < i; ++j)
            if (rows[i][j] != rows[j][i]) return false;
    }
    return true;
}

filtered_complex parse_complex_file(const std::string& text) {
    std::vector<filtered_simplex> entries;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2) throw tda_error("io", "complex line needs a value and vertices");
        filtered_simplex fs;
        fs.value = parse_real(tokens[0]);
        for (size_t k = 1; k < tokens.size(); ++k)
            fs.vertices.push_back(static_cast<int>(parse_real(tokens[k])));
        entries.push_back(std::move(fs));
    }
    filtered_complex out(std::move(entries));
    out.sort_filtration();
    return out;
}

std::string write_complex_file(const filtered_complex& k) {
    filtered_complex sorted = k;
    sorted.sort_filtration();
    std::string out;
    for (const auto& e : sorted.entries()) {
        out += format_real(e.value);
        for (int v : e.vertices) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

barcode parse_diagram_file(const std::string& text) {
    barcode b;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3) throw tda_error("io", "diagram line must be `k birth death`");
        int k = static_cast<int>(parse_real(tokens[0]));
        b.add(k, {parse_real(tokens[1]), parse_real(tokens[2])});
    }
    b.sort();
    return b;
}

std::string write_diagram_file(const barcode& b) {
    barcode sorted = b;
    sorted.sort();
    std::string out;
    for (int k = 0; k <= sorted.max_dim(); ++k)
        for (const auto& iv : sorted.dim(k)) {
            out += std::to_string(k);
            out += ' ';
            out += format_real(iv.birth);
            out += ' ';
            out += format_real(iv.death);
            out += '\n';
        }
    return out;
}

zigzag_diagram parse_zigzag_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_tokens = [&]() {
        while (std::getline(in, line)) {
            auto t = tokenize(line);
            if (!t.empty()) return t;
        }
        throw tda_error("io", "zigzag file truncated");
    };
    auto header = next_tokens();
    if (header.size() != 2) throw tda_error("io", "zigzag header must be `m p`");
    int m = static_cast<int>(parse_real(header[0]));
    zigzag_diagram z;
    z.p = static_cast<int>(parse_real(header[1]));
    field_spec check(z.p);
    auto dims = next_tokens();
    if (static_cast<int>(dims.size()) != m) throw tda_error("io", "zigzag dims line mismatch");
    for (const auto& t : dims) z.dims.push_back(static_cast<int>(parse_real(t)));
    for (int a = 0; a < m - 1; ++a) {
        auto head = next_tokens();
        if (head.size() != 3 || (head[0] != "F" && head[0] != "B"))
            throw tda_error("io", "zigzag arrow header must be `F|B rows cols`");
        zigzag_arrow arrow;
        arrow.forward = head[0] == "F";
        int rows = static_cast<int>(parse_real(head[1]));
        int cols = static_cast<int>(parse_real(head[2]));
        arrow.matrix = fp_matrix(rows, cols, z.p);
        for (int r = 0; r < rows; ++r) {
            auto row = next_tokens();
            if (static_cast<int>(row.size()) != cols)
                throw tda_error("io", "zigzag matrix row length mismatch");
            for (int c = 0; c < cols; ++c)
                arrow.matrix.set(r, c, static_cast<long long>(parse_real(row[c])));
        }
        z.arrows.push_back(std::move(arrow));
    }
    z.validate();
    return z;
}

std::string write_zigzag_file(const zigzag_diagram& z) {
    std::string out = std::to_string(z.slots()) + " " + std::to_string(z.p) + "\n";
    for (size_t i = 0; i < z.dims.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(z.dims[i]);
    }
    out += '\n';
    for (const auto& a : z.arrows) {
        out += a.forward ? "F " : "B ";
        out += std::to_string(a.matrix.rows()) + " " + std::to_string(a.matrix.cols()) + "\n";
        for (int r = 0; r < a.matrix.rows(); ++r) {
            for (int c = 0; c < a.matrix.cols(); ++c) {
                if (c) out += ' ';
                out += std::to_string(a.matrix.at(r, c));
            }
            out += '\n';
        }
    }
    return out;
}

std::string write_zigzag_barcode(const zigzag_barcode& b) {
    std::string out;
    for (auto [i, j] : b) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

sensor_input parse_sensors_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw tda_error("io", std::string("sensors json: ") + e.what());
    }
    sensor_input s;
    try {
        s.n = j.at("n").get<int>();
        s.detection_radius = j.at("R").get<double>();
        s.cover_radius = j.at("R_c").get<double>();
        for (const auto& e : j.at("edges"))
            s.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        for (const auto& v : j.at("fence")) s.fence.push_back(v.get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw tda_error("io", std::string("sensors json: ") + e.what());
    }
    return s;
}

std::string write_sensors_json(const sensor_input& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["R"] = s.detection_radius;
    j["R_c"] = s.cover_radius;
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : s.edges) j["edges"].push_back({a, b});
    j["fence"] = s.fence;
    return j.dump(2) + "\n";
}

std::string write_coverage_report_json(const coverage_report& r) {
    nlohmann::json j;
    j["hypotheses_ok"] = r.hypotheses_ok;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["ok"] = c.ok;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["checks"].push_back(cj);
    }
    j["certificate"] = r.certificate;
    if (r.certificate) j["witness"] = r.witness_description;
    return j.dump(2) + "\n";
}

std::string write_mapper_json(const mapper_graph& g) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : g.nodes) {
        nlohmann::json nj;
        nj["id"] = n.id;
        nj["interval"] = n.interval_index;
        nj["members"] = n.members;
        j["nodes"].push_back(nj);
    }
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
    j["simplices"] = nlohmann::json::array();
    for (const auto& e : g.nerve_complex.entries())
        if (e.vertices.size() >= 3) j["simplices"].push_back(e.vertices);
    return j.dump(2) + "\n";
}

image_config parse_image_config_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw tda_error("io", std::string("image config json: ") + e.what());
    }
    image_config cfg;
    try {
        cfg.xi_min = j.at("xi_min").get<double>();
        cfg.xi_max = j.at("xi_max").get<double>();
        cfg.eta_min = j.at("eta_min").get<double>();
        cfg.eta_max = j.at("eta_max").get<double>();
        cfg.n_xi = j.at("n_xi").get<int>();
        cfg.n_eta = j.at("n_eta").get<int>();
        cfg.sigma = j.at("sigma").get<double>(); // required, no silent default
        if (j.contains("eta_cap")) cfg.eta_cap = j.at("eta_cap").get<double>();
        if (j.contains("weight")) {
            std::string w = j.at("weight").get<std::string>();
            if (w != "linear") throw tda_error("io", "unknown image weight '" + w + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw tda_error("io", std::string("image config json: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::string write_features_csv(const feature_vector& f) {
    std::string header, row;
    for (size_t k = 0; k < f.items.size(); ++k) {
        if (k) {
            header += ',';
            row += ',';
        }
        header += f.items[k].first;
        row += format_real(f.items[k].second);
    }
    return header + "\n" + row + "\n";
}

} // namespace tda
