#pragma once

#include <string>

#include "uniw/graph.hpp"

namespace uniw {

// Text format: first line "n m", then m lines "u v" with 0-based ids.
Graph parse_edgelist(const std::string& text);
std::string emit_edgelist(const Graph& g);  // edges sorted

} // namespace uniw
