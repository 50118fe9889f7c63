#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tda/barcode_space.hpp"
#include "tda/io.hpp"
#include "tda/svg.hpp"

namespace {

constexpr const char* toolkit_version = "tda 0.1.0";

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

// every run prints the version and the resolved configuration to stderr
void print_config(const CLI::App& app) {
    const CLI::App* sub = nullptr;
    for (const auto* s : app.get_subcommands()) sub = s;
    std::ostringstream ss;
    ss << toolkit_version;
    if (sub) {
        ss << " " << sub->get_name();
        for (const auto* opt : sub->get_options()) {
            if (opt->count() == 0 && opt->get_default_str().empty()) continue;
            std::string value = opt->count() ? opt->as<std::string>() : opt->get_default_str();
            ss << " " << opt->get_name() << "=" << value;
        }
    }
    std::cerr << ss.str() << "\n";
}

tda::finite_metric_space load_metric(const std::string& path, const std::string& format) {
    std::string text = tda::read_file(path);
    bool distances = format == "distances" ||
                     (format == "auto" && tda::looks_like_distance_matrix(text));
    if (distances) return tda::parse_distance_csv(text);
    return tda::euclidean_metric(tda::parse_point_cloud_csv(text));
}

std::vector<int> parse_index_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

std::vector<std::vector<int>> read_groups_file(const std::string& path) {
    std::vector<std::vector<int>> out;
    std::istringstream in(tda::read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> group;
        int v;
        while (ls >> v) group.push_back(v);
        if (!group.empty()) out.push_back(std::move(group));
    }
    return out;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        tda::atomic_write(out_path, content);
}

// ---------------------------------------------------------------------------

struct complex_args {
    std::string input, format = "auto", method = "rips", variant = "strong", landmarks, out;
    double rmax = 1.0;
    int maxdim = 2;
};

void run_complex(const complex_args& a) {
    tda::filtered_complex k;
    if (a.method == "rips") {
        k = tda::vietoris_rips(load_metric(a.input, a.format), a.rmax, a.maxdim);
    } else if (a.method == "cech") {
        k = tda::cech(tda::parse_point_cloud_csv(tda::read_file(a.input)), a.rmax, a.maxdim);
    } else if (a.method == "alpha2d") {
        k = tda::alpha_complex_2d(tda::parse_point_cloud_csv(tda::read_file(a.input)));
    } else if (a.method == "witness") {
        if (a.landmarks.empty())
            throw tda::tda_error("usage", "witness method requires --landmarks");
        tda::witness_variant v = a.variant == "lazy"   ? tda::witness_variant::lazy
                                 : a.variant == "weak" ? tda::witness_variant::weak
                                                       : tda::witness_variant::strong;
        k = tda::witness(load_metric(a.input, a.format), parse_index_list(a.landmarks), a.rmax,
                         v, a.maxdim);
    } else {
        throw tda::tda_error("usage", "unknown complex method " + a.method);
    }
    emit(a.out, tda::write_complex_file(k));
}

struct persist_args {
    std::string complex_path, out;
    int field = 2, maxdim = 1;
};

void run_persist(const persist_args& a) {
    auto k = tda::parse_complex_file(tda::read_file(a.complex_path));
    auto bars = tda::compute_barcodes(k, tda::field_spec(a.field), a.maxdim);
    emit(a.out, tda::write_diagram_file(bars));
}

struct distance_args {
    std::string a_path, b_path, metric = "bottleneck";
    double p = 1.0;
    int dim = -1;
};

void run_distance(const distance_args& a) {
    auto ba = tda::parse_diagram_file(tda::read_file(a.a_path));
    auto bb = tda::parse_diagram_file(tda::read_file(a.b_path));
    int top = std::max(ba.max_dim(), bb.max_dim());
    double result = 0.0;
    for (int k = 0; k <= std::max(top, 0); ++k) {
        if (a.dim >= 0 && k != a.dim) continue;
        double d = a.metric == "wasserstein"
                       ? tda::wasserstein(ba.dim(k), bb.dim(k), a.p)
                       : tda::bottleneck(ba.dim(k), bb.dim(k));
        result = std::max(result, d); // dimensions aggregate by max
    }
    std::cout << tda::format_real(result) << "\n";
}

struct featurize_args {
    std::string dgm, method = "algebraic", config, out;
    int dim = 1;
};

void run_featurize(const featurize_args& a) {
    auto bars = tda::parse_diagram_file(tda::read_file(a.dgm));
    tda::diagram d = tda::diagram_of(bars, a.dim);
    tda::feature_vector features;
    if (a.method == "algebraic") {
        std::vector<std::pair<int, int>> indices;
        if (!a.config.empty()) {
            auto j = nlohmann::json::parse(tda::read_file(a.config));
            for (const auto& e : j.at("indices"))
                indices.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        } else {
            for (int i = 1; i <= 3; ++i)
                for (int jj = 0; jj <= 3; ++jj) indices.emplace_back(i, jj);
        }
        features = tda::algebraic_features(d, indices);
    } else if (a.method == "landscape") {
        int k_max = 5, samples = 64;
        double t_min = 0.0, t_max = 0.0;
        bool explicit_range = false;
        if (!a.config.empty()) {
            auto j = nlohmann::json::parse(tda::read_file(a.config));
            k_max = j.value("k_max", 5);
            samples = j.value("n_samples", 64);
            if (j.contains("t_min") && j.contains("t_max")) {
                t_min = j.at("t_min").get<double>();
                t_max = j.at("t_max").get<double>();
                explicit_range = true;
            }
        }
        if (!explicit_range) {
            for (const auto& iv : d) {
                t_min = std::min(t_min, iv.birth);
                t_max = std::max(t_max, iv.death);
            }
            if (t_max <= t_min) t_max = t_min + 1.0;
        }
        auto l = tda::build_landscape(d, k_max);
        for (int k = 1; k <= k_max; ++k)
            for (int s = 0; s < samples; ++s) {
                double t = t_min + (t_max - t_min) * s / (samples - 1);
                char label[64];
                std::snprintf(label, sizeof(label), "ls_%d_%.6g", k, t);
                features.items.emplace_back(label, tda::landscape_eval(l, k, t));
            }
    } else if (a.method == "image") {
        if (a.config.empty())
            throw tda::tda_error("usage", "image featurization requires --config (sigma has no default)");
        auto cfg = tda::parse_image_config_json(tda::read_file(a.config));
        features = tda::persistence_image(d, cfg);
    } else {
        throw tda::tda_error("usage", "unknown featurize method " + a.method);
    }
    emit(a.out, tda::write_features_csv(features));
}

struct mapper_args {
    std::string input, format = "auto", filter, out, svg;
    int intervals = 4, bins = 10, maxdim = 2;
    double overlap = 0.5;
};

void run_mapper(const mapper_args& a) {
    auto metric = load_metric(a.input, a.format);
    auto filter_rows = tda::parse_point_cloud_csv(tda::read_file(a.filter));
    std::vector<double> filter;
    for (const auto& row : filter_rows.points) {
        if (row.size() != 1)
            throw tda::tda_error("usage", "filter file must have one value per row");
        filter.push_back(row[0]);
    }
    tda::interval_cover cover;
    cover.n_intervals = a.intervals;
    cover.overlap = a.overlap;
    cover.f_min = *std::min_element(filter.begin(), filter.end());
    cover.f_max = *std::max_element(filter.begin(), filter.end());
    auto graph = tda::mapper(metric, filter, cover, a.maxdim, a.bins);
    emit(a.out, tda::write_mapper_json(graph));
    if (!a.svg.empty()) tda::atomic_write(a.svg, tda::svg_mapper(graph));
}

struct zigzag_args {
    std::string diagram_path, build, input, format = "auto", groups, filter, out;
    double r = 1.0;
    int homdim = 0, field = 2, levels = 2;
};

void run_zigzag(const zigzag_args& a) {
    tda::zigzag_diagram z;
    if (!a.diagram_path.empty()) {
        z = tda::parse_zigzag_file(tda::read_file(a.diagram_path));
    } else if (a.build == "sample") {
        z = tda::sample_zigzag(load_metric(a.input, a.format), read_groups_file(a.groups), a.r,
                               a.homdim, tda::field_spec(a.field));
    } else if (a.build == "levelset") {
        auto k = tda::parse_complex_file(tda::read_file(a.input));
        auto filter_rows = tda::parse_point_cloud_csv(tda::read_file(a.filter));
        std::map<int, double> f;
        for (size_t i = 0; i < filter_rows.points.size(); ++i)
            f[static_cast<int>(i)] = filter_rows.points[i][0];
        z = tda::levelset_zigzag(k, f, a.levels, a.homdim, tda::field_spec(a.field));
    } else if (a.build == "witness") {
        z = tda::witness_comparison_zigzag(load_metric(a.input, a.format),
                                           read_groups_file(a.groups), a.r, a.homdim,
                                           tda::field_spec(a.field));
    } else {
        throw tda::tda_error("usage", "zigzag needs --diagram or --build sample|levelset|witness");
    }
    emit(a.out, tda::write_zigzag_barcode(tda::decompose(z)));
}

struct coverage_args {
    std::string input, out;
    int field = 2;
};

void run_coverage(const coverage_args& a) {
    auto s = tda::parse_sensors_json(tda::read_file(a.input));
    auto report = tda::verify_coverage(s, tda::field_spec(a.field));
    emit(a.out, tda::write_coverage_report_json(report));
}

struct synth_args {
    std::string shape = "circle", out;
    int n = 20;
    unsigned long long seed = 0;
    double noise = 0.05;
};

void run_synth(const synth_args& a) {
    std::mt19937_64 rng(a.seed);
    if (a.shape == "square") {
        if (a.n != 4) throw tda::tda_error("usage", "square shape emits exactly the 4 unit-square corners (--n 4)");
        tda::point_cloud pc;
        pc.points = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        emit(a.out, tda::write_point_cloud_csv(pc));
        return;
    }
    if (a.shape == "circle" || a.shape == "noisy-circle") {
        if (a.n < 1) throw tda::tda_error("usage", "need n >= 1 points");
        tda::point_cloud pc;
        for (int k = 0; k < a.n; ++k) {
            double theta = 2.0 * 3.14159265358979323846 * k / a.n;
            double radius = 1.0;
            if (a.shape == "noisy-circle") {
                theta = 2.0 * 3.14159265358979323846 * uniform01(rng);
                radius += a.noise * (2.0 * uniform01(rng) - 1.0);
            }
            pc.points.push_back({radius * std::cos(theta), radius * std::sin(theta)});
        }
        emit(a.out, tda::write_point_cloud_csv(pc));
        return;
    }
    if (a.shape == "tree") {
        if (a.n < 1) throw tda::tda_error("usage", "need n >= 1 vertices");
        tda::weighted_tree t;
        t.n = a.n;
        for (int v = 1; v < a.n; ++v) {
            int parent = static_cast<int>(uniform01(rng) * v);
            t.edges.push_back({parent, v, 0.5 + uniform01(rng)});
        }
        emit(a.out, tda::write_distance_csv(tda::tree_metric(t)));
        return;
    }
    throw tda::tda_error("usage", "unknown shape " + a.shape);
}

struct plot_args {
    std::string dgm, barcode_path, landscape_path, out;
    int dim = 1, levels = 3;
};

void run_plot(const plot_args& a) {
    if (a.out.empty()) throw tda::tda_error("usage", "plot requires --out");
    if (!a.dgm.empty()) {
        tda::atomic_write(a.out, tda::svg_diagram(tda::parse_diagram_file(tda::read_file(a.dgm))));
    } else if (!a.barcode_path.empty()) {
        tda::atomic_write(a.out,
                          tda::svg_barcode(tda::parse_diagram_file(tda::read_file(a.barcode_path))));
    } else if (!a.landscape_path.empty()) {
        auto bars = tda::parse_diagram_file(tda::read_file(a.landscape_path));
        auto l = tda::build_landscape(tda::diagram_of(bars, a.dim), a.levels);
        tda::atomic_write(a.out, tda::svg_landscape(l));
    } else {
        throw tda::tda_error("usage", "plot requires one of --dgm, --barcode, --landscape");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological data analysis toolkit"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    complex_args ca;
    auto* complex_cmd = app.add_subcommand("complex", "build a filtered complex");
    complex_cmd->add_option("--input", ca.input, "points or distance CSV")->required();
    complex_cmd->add_option("--input-format", ca.format, "points|distances|auto");
    complex_cmd->add_option("--method", ca.method, "rips|cech|alpha2d|witness");
    complex_cmd->add_option("--rmax", ca.rmax, "maximum filtration scale");
    complex_cmd->add_option("--maxdim", ca.maxdim, "maximum simplex dimension");
    complex_cmd->add_option("--landmarks", ca.landmarks, "comma-separated landmark indices");
    complex_cmd->add_option("--variant", ca.variant, "witness variant: strong|lazy|weak");
    complex_cmd->add_option("--out", ca.out, "output complex file (stdout if omitted)");

    persist_args pa;
    auto* persist_cmd = app.add_subcommand("persist", "compute persistence barcodes");
    persist_cmd->add_option("--complex", pa.complex_path, "complex file")->required();
    persist_cmd->add_option("--field", pa.field, "prime coefficient field");
    persist_cmd->add_option("--maxdim", pa.maxdim, "maximum homology dimension");
    persist_cmd->add_option("--out", pa.out, "output diagram file (stdout if omitted)");

    distance_args da;
    auto* distance_cmd = app.add_subcommand("distance", "distance between two diagrams");
    distance_cmd->add_option("--a", da.a_path, "first diagram file")->required();
    distance_cmd->add_option("--b", da.b_path, "second diagram file")->required();
    distance_cmd->add_option("--metric", da.metric, "bottleneck|wasserstein");
    distance_cmd->add_option("--p", da.p, "wasserstein exponent (>= 1)");
    distance_cmd->add_option("--dim", da.dim, "restrict to one homology dimension");

    featurize_args fa;
    auto* feat_cmd = app.add_subcommand("featurize", "vectorize a diagram");
    feat_cmd->add_option("--dgm", fa.dgm, "diagram file")->required();
    feat_cmd->add_option("--method", fa.method, "algebraic|landscape|image");
    feat_cmd->add_option("--config", fa.config, "JSON config file");
    feat_cmd->add_option("--dim", fa.dim, "homology dimension to featurize");
    feat_cmd->add_option("--out", fa.out, "output CSV (stdout if omitted)");

    mapper_args ma;
    auto* mapper_cmd = app.add_subcommand("mapper", "mapper graph of a filtered cover");
    mapper_cmd->add_option("--input", ma.input, "points or distance CSV")->required();
    mapper_cmd->add_option("--input-format", ma.format, "points|distances|auto");
    mapper_cmd->add_option("--filter", ma.filter, "CSV with one filter value per point")->required();
    mapper_cmd->add_option("--intervals", ma.intervals, "number of cover intervals");
    mapper_cmd->add_option("--overlap", ma.overlap, "overlap fraction in [0,1)");
    mapper_cmd->add_option("--bins", ma.bins, "histogram bins for the gap heuristic");
    mapper_cmd->add_option("--maxdim", ma.maxdim, "nerve dimension cap");
    mapper_cmd->add_option("--out", ma.out, "output JSON (stdout if omitted)");
    mapper_cmd->add_option("--svg", ma.svg, "also write an SVG rendering");

    zigzag_args za;
    auto* zz_cmd = app.add_subcommand("zigzag", "decompose a zig-zag diagram");
    zz_cmd->add_option("--diagram", za.diagram_path, "zig-zag diagram file");
    zz_cmd->add_option("--build", za.build, "sample|levelset|witness");
    zz_cmd->add_option("--input", za.input, "points/distances CSV, or complex file for levelset");
    zz_cmd->add_option("--input-format", za.format, "points|distances|auto");
    zz_cmd->add_option("--groups", za.groups, "file of index groups, one per line");
    zz_cmd->add_option("--filter", za.filter, "vertex function CSV (levelset)");
    zz_cmd->add_option("--levels", za.levels, "number of unit slabs (levelset)");
    zz_cmd->add_option("--r", za.r, "fixed complex scale");
    zz_cmd->add_option("--homdim", za.homdim, "homology dimension");
    zz_cmd->add_option("--field", za.field, "prime coefficient field");
    zz_cmd->add_option("--out", za.out, "output intervals (stdout if omitted)");

    coverage_args cov;
    auto* cov_cmd = app.add_subcommand("coverage", "sensor coverage certificate");
    cov_cmd->add_option("--input", cov.input, "sensors JSON")->required();
    cov_cmd->add_option("--field", cov.field, "prime coefficient field");
    cov_cmd->add_option("--out", cov.out, "report JSON (stdout if omitted)");

    synth_args sa;
    auto* synth_cmd = app.add_subcommand("synth", "synthesize sample inputs");
    synth_cmd->add_option("--shape", sa.shape, "circle|square|tree|noisy-circle");
    synth_cmd->add_option("--n", sa.n, "point/vertex count");
    synth_cmd->add_option("--seed", sa.seed, "RNG seed (all randomness is seeded)");
    synth_cmd->add_option("--noise", sa.noise, "radial noise for noisy-circle");
    synth_cmd->add_option("--out", sa.out, "output CSV (stdout if omitted)");

    plot_args pla;
    auto* plot_cmd = app.add_subcommand("plot", "render SVG plots");
    plot_cmd->add_option("--dgm", pla.dgm, "diagram file, rendered as a diagram scatter");
    plot_cmd->add_option("--barcode", pla.barcode_path, "diagram file, rendered as barcode strips");
    plot_cmd->add_option("--landscape", pla.landscape_path, "diagram file, rendered as landscapes");
    plot_cmd->add_option("--dim", pla.dim, "homology dimension for --landscape");
    plot_cmd->add_option("--levels", pla.levels, "landscape levels for --landscape");
    plot_cmd->add_option("--out", pla.out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "E:usage: " << e.what() << "\n";
        return 2;
    }

    print_config(app);
    try {
        if (complex_cmd->parsed()) run_complex(ca);
        if (persist_cmd->parsed()) run_persist(pa);
        if (distance_cmd->parsed()) run_distance(da);
        if (feat_cmd->parsed()) run_featurize(fa);
        if (mapper_cmd->parsed()) run_mapper(ma);
        if (zz_cmd->parsed()) run_zigzag(za);
        if (cov_cmd->parsed()) run_coverage(cov);
        if (synth_cmd->parsed()) run_synth(sa);
        if (plot_cmd->parsed()) run_plot(pla);
    } catch (const tda::tda_error& e) {
        std::cerr << "E:" << e.code() << ": " << e.what() << "\n";
        return e.code() == "usage" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "E:internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
