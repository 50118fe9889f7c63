#pragma once

#include <array>

#include "tda/persistence.hpp"

namespace tda {

// Coordinate-free sensor data: the detection graph is the only geometric
// knowledge the verifier receives.
struct sensor_input {
    int n = 0;
    double detection_radius = 0.0; // R
    double cover_radius = 0.0;     // R_c, reported against R/sqrt(3)
    std::vector<std::pair<int, int>> edges;
    std::vector<int> fence; // cyclically ordered sensor ids
};

struct coverage_check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct coverage_report {
    bool hypotheses_ok = false;
    std::vector<coverage_check> checks;
    bool certificate = false;
    std::string witness_description; // meaningful only when certificate holds
};

coverage_report verify_coverage(const sensor_input& s, field_spec f);

struct deployment {
    sensor_input input;
    std::vector<std::array<double, 2>> positions; // harness-side only
    bool ground_truth_covered = false;
};

// Uniform interior sensors plus fence nodes spaced < R along the rectangle
// boundary; ground truth by a fine-grid point-in-union test at radius R_c.
deployment simulate_deployment(double width, double height, int n_interior, double r,
                               double r_c, unsigned long long seed);

} // namespace tda
