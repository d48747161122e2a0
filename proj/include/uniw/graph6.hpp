#pragma once

#include <string>

#include "uniw/graph.hpp"

namespace uniw {

// graph6: printable encoding of the upper adjacency triangle in column-major
// bit order. Accepts the optional ">>graph6<<" header and all three size
// forms; emit always uses the shortest size form.
Graph parse_graph6(const std::string& bytes);
std::string emit_graph6(const Graph& g);

} // namespace uniw
