#pragma once

#include <compare>
#include <string>
#include <vector>

#include "uniw/decompose.hpp"
#include "uniw/graph.hpp"

namespace uniw {

// Canonical level sequence of a rooted tree: depths in preorder, children
// visited in non-increasing order of their own sequences. Equal codes mean
// isomorphic rooted trees.
struct RootedTreeCode {
    std::vector<int> levels;
    int order() const { return static_cast<int>(levels.size()); }
    auto operator<=>(const RootedTreeCode&) const = default;
};

RootedTreeCode rooted_code(const RootedTree& t);
RootedTree decode_rooted(const RootedTreeCode& code);

// Branch codes around the cycle, minimal over all 2g rotations and
// reflections. Complete isomorphism invariant for unicyclic graphs.
struct NecklaceCode {
    int girth = 0;
    std::vector<RootedTreeCode> branches;
    auto operator<=>(const NecklaceCode&) const = default;
    std::string to_string() const;
};

std::vector<RootedTreeCode> dihedral_minimum(const std::vector<RootedTreeCode>& seq);
bool is_dihedral_minimal(const std::vector<RootedTreeCode>& seq);

NecklaceCode necklace_code(const Graph& g);

bool unicyclic_isomorphic(const Graph& a, const Graph& b);

} // namespace uniw
