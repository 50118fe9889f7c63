#pragma once

#include "tda/persistence.hpp"

namespace tda {

// A diagram is a finite multiset of intervals; zero-length points are
// dropped by canonicalize (they are identified away in barcode space).
using diagram = std::vector<interval>;

diagram canonicalize(diagram b);
diagram diagram_of(const barcode& b, int dim);

// Penalty between two intervals: sup-norm of endpoint differences.
double matching_penalty(const interval& a, const interval& b);

// Exact bottleneck distance (W_infinity). Intervals with infinite death
// must pair with each other; a count mismatch yields +infinity.
double bottleneck(const diagram& b1, const diagram& b2);

// Exact p-Wasserstein distance, p >= 1, same infinite-interval policy.
double wasserstein(const diagram& b1, const diagram& b2, double p);

diagram truncate(const diagram& b, double x);
double total_persistence(const diagram& b, double k);
double chi_pers(const barcode& bars, double x);
double lambda_stat(const diagram& b);
double median_distance_stat(const std::vector<diagram>& samples, const diagram& reference);

} // namespace tda
