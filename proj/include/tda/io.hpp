#pragma once

#include "tda/complex.hpp"
#include "tda/coverage.hpp"
#include "tda/mapper.hpp"
#include "tda/persistence.hpp"
#include "tda/vectorize.hpp"
#include "tda/zigzag.hpp"

namespace tda {

// 17 significant digits so pipelines reproduce byte-identically.
std::string format_real(double v);
double parse_real(const std::string& token);

void atomic_write(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// CSV, one point per row, no header.
point_cloud parse_point_cloud_csv(const std::string& text);
std::string write_point_cloud_csv(const point_cloud& pc);

// CSV, full square matrix or lower-triangular-with-diagonal, detected by
// row lengths.
finite_metric_space parse_distance_csv(const std::string& text);
std::string write_distance_csv(const finite_metric_space& x);

// Either of the two inputs above: square symmetric zero-diagonal tables
// load as distance matrices, anything else as a point cloud.
bool looks_like_distance_matrix(const std::string& text);

// One line per simplex: `value v0 v1 ... vk`, ascending filtration order.
filtered_complex parse_complex_file(const std::string& text);
std::string write_complex_file(const filtered_complex& k);

// Lines `k birth death`; death may be `inf`; sorted by (k, birth, death).
barcode parse_diagram_file(const std::string& text);
std::string write_diagram_file(const barcode& b);

// Header `m p`, dims line, per-arrow blocks `F|B rows cols` + matrix rows.
zigzag_diagram parse_zigzag_file(const std::string& text);
std::string write_zigzag_file(const zigzag_diagram& z);
std::string write_zigzag_barcode(const zigzag_barcode& b);

sensor_input parse_sensors_json(const std::string& text);
std::string write_sensors_json(const sensor_input& s);
std::string write_coverage_report_json(const coverage_report& r);

std::string write_mapper_json(const mapper_graph& g);

image_config parse_image_config_json(const std::string& text);

std::string write_features_csv(const feature_vector& f);

} // namespace tda
