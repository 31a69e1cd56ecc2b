#pragma once

#include <stdexcept>
#include <string>

#include "hamlab/graph.hpp"

namespace hamlab {

struct Graph6Error : std::runtime_error {
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

// Short-form graph6 (order <= 62): header byte 63+n, then the upper triangle
// column-major in 6-bit chunks, each chunk +63, zero-padded. A leading
// ">>graph6<<" marker and surrounding whitespace are tolerated on input.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

}  // namespace hamlab
