#include "uniw/transforms.hpp"

#include <algorithm>
#include <string>

#include "uniw/canonical.hpp"
#include "uniw/matching.hpp"

namespace uniw {

namespace {

void check_branch_index(const CycleDecomposition& d, int i) {
    if (i < 0 || i >= d.girth()) throw input_error("branch index out of range");
}

// Identify the roots of two trees. Result keeps a's numbering; b's non-root
// vertices follow.
RootedTree merge_at_root(const RootedTree& a, const RootedTree& b) {
    Graph merged = identify_vertices(a.graph, a.root, b.graph, b.root);
    return RootedTree{merged, a.root};
}

RootedTree remove_leaf(const RootedTree& t, int leaf) {
    if (t.graph.degree(leaf) != 1 || leaf == t.root)
        throw input_error("remove_leaf: vertex is not a removable leaf");
    std::vector<char> keep(t.order(), 1);
    keep[leaf] = 0;
    Graph g = induced_subgraph(t.graph, keep);
    return RootedTree{g, t.root - (t.root > leaf ? 1 : 0)};
}

// Smallest pendant child of the root, or -1.
int root_pendant(const RootedTree& t) {
    for (int c : t.graph.neighbors(t.root))
        if (t.graph.degree(c) == 1) return c;
    return -1;
}

Graph assemble_with(const Graph& g, const CycleDecomposition& d,
                    const std::vector<std::pair<int, RootedTree>>& replacements) {
    auto trees = branch_trees(g, d);
    for (const auto& [i, t] : replacements) trees[i] = t;
    return build_cycle_assembly(d.girth(), trees);
}

TransformOutcome make_outcome(std::string rule, const Graph& before, Graph after, bool strict) {
    TransformOutcome o;
    o.wiener_before = wiener_index(before);
    o.wiener_after = wiener_index(after);
    o.beta_before = matching_size(before);
    o.beta_after = matching_size(after);
    o.rule = std::move(rule);
    o.strict = strict;
    o.result = std::move(after);
    return o;
}

} // namespace

std::optional<int> has_matched_root_edge(const Graph& g, const CycleDecomposition& d, int i) {
    check_branch_index(d, i);
    const int ui = d.cycle[i];
    std::vector<char> in_branch(g.vertex_count(), 0);
    for (int v : d.branches[i].vertices) in_branch[v] = 1;

    const int beta = matching_size(g);
    for (int x : g.neighbors(ui)) {
        if (!in_branch[x]) continue;
        std::vector<char> keep(g.vertex_count(), 1);
        keep[ui] = keep[x] = 0;
        // u_i sits on the cycle, so the remainder is a forest
        if (matching_size(induced_subgraph(g, keep)) == beta - 1) return x;
    }
    return std::nullopt;
}

TransformOutcome branch_collapse_matched(const Graph& g, const CycleDecomposition& d, int i) {
    check_branch_index(d, i);
    const int ni = d.branch_orders[i];
    if (ni == 1)
        return make_outcome("branch_collapse_matched", g, g, false);
    if (!has_matched_root_edge(g, d, i))
        throw rule_error("branch_collapse_matched: no maximum matching uses a root edge of branch " +
                         std::to_string(i));
    const int beta_i = matching_size(branch_tree(g, d, i).graph);
    auto target = build_star_like({beta_i - 1, ni - 2 * beta_i + 1});
    return make_outcome("branch_collapse_matched", g, assemble_with(g, d, {{i, target}}), false);
}

TransformOutcome branch_collapse_unmatched(const Graph& g, const CycleDecomposition& d, int i) {
    check_branch_index(d, i);
    const int ni = d.branch_orders[i];
    if (ni < 2) throw rule_error("branch_collapse_unmatched: branch order must be >= 2");
    if (has_matched_root_edge(g, d, i))
        throw rule_error("branch_collapse_unmatched: a maximum matching uses a root edge of branch " +
                         std::to_string(i));
    auto t = branch_tree(g, d, i);
    std::vector<char> keep(t.order(), 1);
    keep[t.root] = 0;
    const int beta1 = matching_size(induced_subgraph(t.graph, keep));
    auto target = build_star_like({beta1, ni - 2 * beta1 - 1});
    return make_outcome("branch_collapse_unmatched", g, assemble_with(g, d, {{i, target}}), false);
}

std::pair<TransformOutcome, TransformOutcome> pendant_switch(const Graph& g,
                                                             const CycleDecomposition& d, int p,
                                                             int q) {
    check_branch_index(d, p);
    check_branch_index(d, q);
    if (p == q) throw input_error("pendant_switch: p and q must differ");
    auto tp = branch_tree(g, d, p), tq = branch_tree(g, d, q);
    if (tp.order() < 3 || tq.order() < 3)
        throw rule_error("pendant_switch: both branches need order >= 3");
    int x = root_pendant(tp), y = root_pendant(tq);
    if (x < 0 || y < 0) throw rule_error("pendant_switch: both roots need a pendant neighbor");

    auto edge_branch = build_star_like({0, 1});
    Graph g1 = assemble_with(g, d, {{p, merge_at_root(tp, remove_leaf(tq, y))}, {q, edge_branch}});
    Graph g2 = assemble_with(g, d, {{p, edge_branch}, {q, merge_at_root(remove_leaf(tp, x), tq)}});

    auto o1 = make_outcome("pendant_switch", g, std::move(g1), false);
    auto o2 = make_outcome("pendant_switch", g, std::move(g2), false);
    (o1.wiener_after <= o2.wiener_after ? o1 : o2).strict = true;
    return {std::move(o1), std::move(o2)};
}

std::pair<TransformOutcome, TransformOutcome> pendant_absorb(const Graph& g,
                                                             const CycleDecomposition& d, int p,
                                                             int q) {
    check_branch_index(d, p);
    check_branch_index(d, q);
    if (p == q) throw input_error("pendant_absorb: p and q must differ");
    auto tp = branch_tree(g, d, p), tq = branch_tree(g, d, q);
    if (tp.order() < 3 || tq.order() < 3)
        throw rule_error("pendant_absorb: both branches need order >= 3");
    if (root_pendant(tp) >= 0)
        throw rule_error("pendant_absorb: branch p must have no pendant at its root");
    int y = root_pendant(tq);
    if (y < 0) throw rule_error("pendant_absorb: branch q needs a pendant at its root");

    Graph g1 = assemble_with(
        g, d, {{p, merge_at_root(tp, remove_leaf(tq, y))}, {q, build_star_like({0, 1})}});
    Graph g2 = assemble_with(g, d, {{p, build_star_like({0, 0})}, {q, merge_at_root(tp, tq)}});

    auto o1 = make_outcome("pendant_absorb", g, std::move(g1), false);
    auto o2 = make_outcome("pendant_absorb", g, std::move(g2), false);
    (o1.wiener_after <= o2.wiener_after ? o1 : o2).strict = true;
    return {std::move(o1), std::move(o2)};
}

TransformOutcome star_branch_fix(const Graph& g, const CycleDecomposition& d, int p, int q) {
    check_branch_index(d, p);
    check_branch_index(d, q);
    if (p == q) throw input_error("star_branch_fix: p and q must differ");
    auto sp = star_params(branch_tree(g, d, p));
    auto sq = star_params(branch_tree(g, d, q));
    if (!sp || !sq) throw rule_error("star_branch_fix: both branches must be star-like");
    if (sp->b != 0 || sp->a < 1)
        throw rule_error("star_branch_fix: branch p must be T*_{a,0} with a >= 1");
    if (sq->b <= 0 || 2 * sq->a + sq->b < 2)
        throw rule_error("star_branch_fix: branch q must be T*_{a,b} with b > 0 and order >= 3");

    const int beta0 = matching_size(g);
    auto pendant = build_star_like({0, 1});
    Graph g1 = assemble_with(
        g, d, {{p, build_star_like({sp->a + sq->a, sq->b - 1})}, {q, pendant}});
    Graph g2 = assemble_with(
        g, d, {{p, build_star_like({0, 0})}, {q, build_star_like({sp->a + sq->a, sq->b})}});

    std::vector<Graph> candidates;
    if (matching_size(g1) == beta0) {
        candidates.push_back(std::move(g1));
    } else {
        // matching drifted up by one; repair through T*_{a_p+a_q-1, b_q+1}
        candidates.push_back(assemble_with(
            g, d, {{p, build_star_like({sp->a + sq->a - 1, sq->b + 1})}, {q, pendant}}));
    }
    if (matching_size(g2) == beta0) candidates.push_back(std::move(g2));

    Graph* best = nullptr;
    long long best_w = 0;
    for (auto& c : candidates) {
        if (matching_size(c) != beta0) continue;
        long long w = wiener_index(c);
        if (!best || w < best_w || (w == best_w && necklace_code(c) < necklace_code(*best))) {
            best = &c;
            best_w = w;
        }
    }
    if (!best || best_w >= wiener_index(g))
        throw error("star_branch_fix: no matching-preserving improvement found");
    return make_outcome("star_branch_fix", g, std::move(*best), true);
}

std::pair<TransformOutcome, TransformOutcome> branch_merge(const Graph& g,
                                                           const CycleDecomposition& d, int p,
                                                           int q) {
    check_branch_index(d, p);
    check_branch_index(d, q);
    if (p == q) throw input_error("branch_merge: p and q must differ");
    auto tp = branch_tree(g, d, p), tq = branch_tree(g, d, q);
    const bool nontrivial = tp.order() >= 2 && tq.order() >= 2;

    auto isolated = build_star_like({0, 0});
    Graph g1 = assemble_with(g, d, {{p, merge_at_root(tp, tq)}, {q, isolated}});
    Graph g2 = assemble_with(g, d, {{p, isolated}, {q, merge_at_root(tp, tq)}});

    auto o1 = make_outcome("branch_merge", g, std::move(g1), false);
    auto o2 = make_outcome("branch_merge", g, std::move(g2), false);
    if (nontrivial) (o1.wiener_after <= o2.wiener_after ? o1 : o2).strict = true;
    return {std::move(o1), std::move(o2)};
}

namespace {

// Pick the matching-preserving outcome with the smaller Wiener index;
// necklace-code order breaks ties.
std::optional<TransformOutcome> best_admissible(std::pair<TransformOutcome, TransformOutcome> pair) {
    auto admissible = [](const TransformOutcome& o) { return o.beta_after == o.beta_before; };
    auto& [a, b] = pair;
    bool ok_a = admissible(a), ok_b = admissible(b);
    if (!ok_a && !ok_b) return std::nullopt;
    if (ok_a && ok_b) {
        if (a.wiener_after != b.wiener_after)
            return a.wiener_after < b.wiener_after ? std::move(a) : std::move(b);
        return necklace_code(a.result) <= necklace_code(b.result) ? std::move(a) : std::move(b);
    }
    return ok_a ? std::move(a) : std::move(b);
}

} // namespace

ReductionTrace reduce_to_canonical(const Graph& g0) {
    auto d0 = decompose_unicyclic(g0);  // validates the class
    const long long cap = static_cast<long long>(g0.vertex_count()) * d0.girth();
    const int beta0 = matching_size(g0);

    ReductionTrace trace;
    Graph cur = g0;

    auto push_step = [&](TransformOutcome o) {
        if (o.wiener_after > o.wiener_before)
            throw error("reduction step increased the Wiener index (rule " + o.rule + ")");
        if (o.beta_after != beta0)
            throw error("reduction step changed the matching number (rule " + o.rule + ")");
        cur = o.result;
        trace.steps.push_back(std::move(o));
        if (static_cast<long long>(trace.steps.size()) > cap)
            throw error("reduction exceeded the step cap of " + std::to_string(cap) + " after rule " +
                        trace.steps.back().rule);
    };

    // collapse every branch to star shape
    for (bool changed = true; changed;) {
        changed = false;
        auto d = decompose_unicyclic(cur);
        for (int i = 0; i < d.girth() && !changed; ++i) {
            if (d.branch_orders[i] < 2) continue;
            auto o = has_matched_root_edge(cur, d, i) ? branch_collapse_matched(cur, d, i)
                                                      : branch_collapse_unmatched(cur, d, i);
            if (necklace_code(o.result) == necklace_code(cur)) continue;  // already that shape
            push_step(std::move(o));
            changed = true;
        }
    }

    // combine big branches pairwise until at most one remains
    while (true) {
        auto d = decompose_unicyclic(cur);
        std::vector<StarlikeParams> shapes(d.girth());
        std::vector<int> big;
        for (int i = 0; i < d.girth(); ++i) {
            auto sp = star_params(branch_tree(cur, d, i));
            if (!sp) throw error("reduction invariant failed: non-star branch after collapse");
            shapes[i] = *sp;
            if (shapes[i].order() >= 3) big.push_back(i);
        }
        if (big.size() <= 1) break;

        std::optional<TransformOutcome> chosen;
        for (size_t a = 0; a < big.size() && !chosen; ++a) {
            for (size_t b = a + 1; b < big.size() && !chosen; ++b) {
                int p = big[a], q = big[b];
                if (shapes[p].b >= 1 && shapes[q].b >= 1)
                    chosen = best_admissible(pendant_switch(cur, d, p, q));
                else if (shapes[p].b == 0 && shapes[q].b >= 1)
                    chosen = star_branch_fix(cur, d, p, q);
                else if (shapes[p].b >= 1 && shapes[q].b == 0)
                    chosen = star_branch_fix(cur, d, q, p);
                else
                    chosen = best_admissible(branch_merge(cur, d, p, q));
            }
        }
        if (!chosen) throw error("reduction blocked: no matching-preserving rule applies");
        if (chosen->wiener_after >= chosen->wiener_before)
            throw error("reduction stalled: chosen rule " + chosen->rule + " did not decrease W");
        push_step(std::move(*chosen));
    }

    trace.final_graph = cur;
    auto params = canonical_family_params(cur);
    if (!params) throw error("reduction finished outside the canonical family");
    trace.final_params = *params;
    return trace;
}

} // namespace uniw
