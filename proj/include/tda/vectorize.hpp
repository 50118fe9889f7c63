#pragma once

#include <optional>
#include <string>

#include "tda/barcode_space.hpp"

namespace tda {

struct feature_vector {
    std::vector<std::pair<std::string, double>> items;

    double value_of(const std::string& label) const;
    double sum() const;
};

feature_vector algebraic_features(const diagram& b,
                                  const std::vector<std::pair<int, int>>& indices);

struct landscape_point {
    double t = 0.0;
    double v = 0.0;
};

// lambda_k stored exactly as sorted critical points; implicitly 0 outside
// the support and for levels beyond those stored.
struct landscape {
    std::vector<std::vector<landscape_point>> levels;

    int level_count() const { return static_cast<int>(levels.size()); }
};

landscape build_landscape(const diagram& b, int k_max);
double landscape_eval(const landscape& l, int k, double t);

// L_p norm of the level-wise difference; p in {1, 2} (piecewise-polynomial
// integration) or infinity (critical-point scan).
double landscape_distance(const landscape& l1, const landscape& l2, double p);

enum class image_weight { linear };

struct image_config {
    double xi_min = 0.0, xi_max = 1.0;
    double eta_min = 0.0, eta_max = 1.0;
    int n_xi = 1, n_eta = 1;
    double sigma = 0.0; // no silent default; must be set explicitly
    image_weight weight = image_weight::linear;
    std::optional<double> eta_cap; // default: eta_max of the box

    void validate() const;
    double weight_at(double eta) const;
};

// Pixel values are exact integrals of the weighted Gaussian surface over
// each grid square (products of error-function differences per axis).
feature_vector persistence_image(const diagram& b, const image_config& cfg);

} // namespace tda
