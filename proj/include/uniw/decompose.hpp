#pragma once

#include <vector>

#include "uniw/graph.hpp"

namespace uniw {

// The unique cycle u_1..u_g of a unicyclic graph together with the g rooted
// branch trees: branch i is the component of G - E(C_g) containing cycle[i].
struct CycleDecomposition {
    struct Branch {
        int root = 0;                    // host vertex id, equal to cycle[i]
        std::vector<int> vertices;       // BFS order from the root
        std::vector<Edge> edges;         // (parent, child) in BFS order
    };
    std::vector<int> cycle;              // normalized: starts at the smallest
                                         // id on the cycle, oriented toward
                                         // its smaller-id cycle neighbor
    std::vector<Branch> branches;        // branches[i] rooted at cycle[i]
    std::vector<int> branch_orders;
    int girth() const { return static_cast<int>(cycle.size()); }
};

// Throws class_error for trees and multicyclic or disconnected inputs.
CycleDecomposition decompose_unicyclic(const Graph& g);

// Branch i as a standalone rooted tree; local ids follow the branch's BFS
// order, so the root becomes vertex 0.
RootedTree branch_tree(const Graph& g, const CycleDecomposition& d, int i);

std::vector<RootedTree> branch_trees(const Graph& g, const CycleDecomposition& d);

// The quantities the cycle/branch Wiener decomposition is evaluated from.
struct DecompositionStats {
    int girth = 0;
    long long order = 0;
    std::vector<long long> branch_orders;
    std::vector<long long> branch_wiener;
    std::vector<long long> branch_root_transmission;
};

DecompositionStats decomposition_stats(const Graph& g, const CycleDecomposition& d);

} // namespace uniw
