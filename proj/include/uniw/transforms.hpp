#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uniw/constructions.hpp"
#include "uniw/decompose.hpp"
#include "uniw/graph.hpp"

namespace uniw {

// Record of one rule application. beta_after is measured, never assumed;
// strict marks the outcome for which the rule claims a strict decrease.
struct TransformOutcome {
    Graph result;
    long long wiener_before = 0;
    long long wiener_after = 0;
    int beta_before = 0;
    int beta_after = 0;
    std::string rule;
    bool strict = false;
};

struct ReductionTrace {
    std::vector<TransformOutcome> steps;
    Graph final_graph;
    CanonicalFamilyParams final_params;
};

// Some x in branch i adjacent to the cycle vertex u_i such that a maximum
// matching of G uses the edge u_i x; nullopt when no maximum matching does.
std::optional<int> has_matched_root_edge(const Graph& g, const CycleDecomposition& d, int i);

// Replace branch i by the star-like tree of equal order that keeps the
// matching number, in the case where a maximum matching uses a root edge
// (or the branch is a single vertex). Wiener never increases; equality
// exactly when the branch already has the target shape.
TransformOutcome branch_collapse_matched(const Graph& g, const CycleDecomposition& d, int i);

// Same replacement in the case where no maximum matching uses a root edge;
// the target is T*_{beta', n_i - 2 beta' - 1} with beta' the matching number
// of the branch minus its root.
TransformOutcome branch_collapse_unmatched(const Graph& g, const CycleDecomposition& d, int i);

// Move branch q's tree mass (minus one pendant) onto u_p, or symmetrically;
// both branches need order >= 3 and a pendant at their root. The smaller of
// the two results has strictly smaller Wiener index; matching is preserved.
std::pair<TransformOutcome, TransformOutcome> pendant_switch(const Graph& g,
                                                             const CycleDecomposition& d, int p,
                                                             int q);

// Same move when branch p has no pendant at its root: either absorb q's
// non-pendant mass into p, or all of p into q. Strict decrease on the
// smaller result; matching preservation is not claimed.
std::pair<TransformOutcome, TransformOutcome> pendant_absorb(const Graph& g,
                                                             const CycleDecomposition& d, int p,
                                                             int q);

// Star-shaped instance of the absorb move with a repair step: branch p is
// T*_{a_p,0} (a_p >= 1) and branch q is T*_{a_q,b_q} with b_q > 0. Returns a
// graph with equal matching number and strictly smaller Wiener index.
TransformOutcome star_branch_fix(const Graph& g, const CycleDecomposition& d, int p, int q);

// Merge all of one branch onto the other's root (both directions). Strict
// decrease on the smaller result when both branches have order >= 2;
// matching is preserved when both branches are T*_{a,0}.
std::pair<TransformOutcome, TransformOutcome> branch_merge(const Graph& g,
                                                           const CycleDecomposition& d, int p,
                                                           int q);

// Drive a unicyclic graph into the canonical family
// U(T*_{a1,b1}, T*_{0,b2}, ..., T*_{0,bg}) with b_j <= 1 for j >= 2:
// first collapse every branch to star shape, then combine big branches
// pairwise, always keeping the matching number and never increasing the
// Wiener index. Throws when the step count exceeds n*g.
ReductionTrace reduce_to_canonical(const Graph& g);

} // namespace uniw
