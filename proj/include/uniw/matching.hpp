#pragma once

#include <utility>
#include <vector>

#include "uniw/graph.hpp"

namespace uniw {

// A set of pairwise non-adjacent edges.
struct Matching {
    std::vector<Edge> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

bool is_valid_matching(const Graph& g, const Matching& m);

// Exact maximum matching size with a witness. Supports forests and graphs
// with a single cycle; anything with two or more independent cycles is
// rejected with class_error.
//
// Forests use repeated leaf matching. With a cycle edge e = (u,v),
// beta(G) = max(beta(G-e), 1 + beta(G-u-v)); both arguments are forests.
std::pair<int, Matching> matching_number(const Graph& g);

int matching_size(const Graph& g);

} // namespace uniw
