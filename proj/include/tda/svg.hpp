#pragma once

#include <string>

#include "tda/mapper.hpp"
#include "tda/persistence.hpp"
#include "tda/vectorize.hpp"

namespace tda {

// Static plots mirroring the usual presentations: barcode strips, a
// diagonal-marked diagram scatter, landscape polylines, mapper graphs.
std::string svg_barcode(const barcode& b);
std::string svg_diagram(const barcode& b);
std::string svg_landscape(const landscape& l);
std::string svg_mapper(const mapper_graph& g);

} // namespace tda
