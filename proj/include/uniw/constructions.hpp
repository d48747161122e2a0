#pragma once

#include <optional>
#include <vector>

#include "uniw/decompose.hpp"
#include "uniw/graph.hpp"

namespace uniw {

// Parameters of the star-like rooted tree T*_{a,b}: the root carries a+b
// children, a of which hold one pendant leaf each. Order 2a+b+1.
struct StarlikeParams {
    int a = 0;  // paths of length 2 from the root
    int b = 0;  // pendant edges at the root
    int order() const { return 2 * a + b + 1; }
    bool operator==(const StarlikeParams&) const = default;
};

// Parameters (n, g, beta) of the extremal unicyclic graph G*.
// Feasible when n >= 2*beta, 2*beta >= 3*g and g >= 3.
struct ExtremalParams {
    int n = 0;
    int g = 0;
    int beta = 0;
};

void validate_extremal_params(const ExtremalParams& p);  // throws input_error

// Canonical family member U(T*_{a1,b1}, T*_{0,b2}, ..., T*_{0,bg})
// with b_j <= 1 for j >= 2.
struct CanonicalFamilyParams {
    StarlikeParams big;              // (a1, b1)
    std::vector<int> pendant_flags;  // b_2..b_g, each 0 or 1
    int t() const;
};

RootedTree build_star_like(const StarlikeParams& p);

// Shape test: returns (a, b) when the tree is star-like about its root.
std::optional<StarlikeParams> star_params(const RootedTree& t);

// Unicyclic graph U(T_1,...,T_g): cycle vertices come first (0..g-1), then
// each branch's non-root vertices in BFS order.
Graph build_cycle_assembly(int g, const std::vector<RootedTree>& branches);

Graph build_canonical_family(int g, const CanonicalFamilyParams& p);

// Family membership of a unicyclic graph: all branches star-like and at most
// one branch outside {T*_{0,0}, T*_{0,1}}.
std::optional<CanonicalFamilyParams> canonical_family_params(const Graph& g);

// The extremal graph G*_{(n,g,beta)}: one big star-like branch on a cycle,
// plus one extra cycle pendant when g is even. Validates order, girth and
// matching number of the result before returning.
Graph construct_gstar(const ExtremalParams& p);

// Wiener index of a unicyclic graph from its cycle/branch statistics:
//   (n - g/2) * floor(g^2/4) + (g-1) * sum_i d_{T_i}(u_i) + sum_i W(T_i)
//   + sum_{i<j} [(n_i-1) d_{T_j}(u_j) + (n_j-1) d_{T_i}(u_i)
//                + (n_i-1)(n_j-1) d_{C_g}(u_i,u_j)]
long long eval_decomposition(const DecompositionStats& s);

// W(T*_{beta, n-2*beta-1}) = n^2 + (beta-2)n - 3*beta + 1.
long long eval_star_tree_formula(int n, int beta);

// Printed closed forms for W(G*). These reproduce the text verbatim;
// agreement with the directly computed Wiener index is reported by the
// verification sweep, not assumed.
long long eval_gstar_formula_odd(const ExtremalParams& p);
long long eval_gstar_formula_even(const ExtremalParams& p);

} // namespace uniw
