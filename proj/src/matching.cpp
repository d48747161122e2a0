#include "uniw/matching.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace uniw {

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::set<int> used;
    for (const auto& [u, v] : m.edges) {
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) return false;
        if (!g.has_edge(u, v)) return false;
        if (used.count(u) || used.count(v)) return false;
        used.insert(u);
        used.insert(v);
    }
    return true;
}

namespace {

int count_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
    }
    return comps;
}

// Maximum matching of the forest induced by alive[], optionally skipping one
// edge. Repeatedly matching a leaf to its unique neighbor is exact on forests.
std::vector<Edge> forest_matching(const Graph& g, std::vector<char> alive, int skip_u, int skip_v) {
    const int n = g.vertex_count();
    auto skipped = [&](int a, int b) {
        return (a == skip_u && b == skip_v) || (a == skip_v && b == skip_u);
    };
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (int w : g.neighbors(v))
            if (alive[w] && !skipped(v, w)) ++deg[v];
    }
    std::queue<int> leaves;
    for (int v = 0; v < n; ++v)
        if (alive[v] && deg[v] == 1) leaves.push(v);

    std::vector<Edge> matched;
    while (!leaves.empty()) {
        int u = leaves.front();
        leaves.pop();
        if (!alive[u] || deg[u] != 1) continue;
        int v = -1;
        for (int w : g.neighbors(u))
            if (alive[w] && !skipped(u, w)) {
                v = w;
                break;
            }
        matched.emplace_back(std::min(u, v), std::max(u, v));
        alive[u] = alive[v] = 0;
        for (int w : g.neighbors(v))
            if (alive[w] && !skipped(v, w) && --deg[w] == 1) leaves.push(w);
    }
    return matched;
}

// Vertices left after iterated leaf deletion; for a graph with one cycle
// this is exactly that cycle.
std::vector<char> two_core(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::queue<int> q;
    std::vector<char> in_core(n, 1);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (!in_core[u]) continue;
        in_core[u] = 0;
        for (int w : g.neighbors(u))
            if (in_core[w] && --deg[w] == 1) q.push(w);
    }
    return in_core;
}

} // namespace

std::pair<int, Matching> matching_number(const Graph& g) {
    const int n = g.vertex_count();
    const long long independent_cycles = g.edge_count() - n + count_components(g);
    if (independent_cycles >= 2)
        throw class_error("matching_number: graph has " + std::to_string(independent_cycles) +
                          " independent cycles; only forests and unicyclic graphs are supported");

    std::vector<char> alive(n, 1);
    if (independent_cycles == 0) {
        auto m = forest_matching(g, alive, -1, -1);
        return {static_cast<int>(m.size()), Matching{std::move(m)}};
    }

    auto in_core = two_core(g);
    int u = -1;
    for (int v = 0; v < n && u < 0; ++v)
        if (in_core[v]) u = v;
    int v = -1;
    for (int w : g.neighbors(u))
        if (in_core[w]) {
            v = w;
            break;
        }

    auto without_edge = forest_matching(g, alive, u, v);
    alive[u] = alive[v] = 0;
    auto with_edge = forest_matching(g, alive, -1, -1);
    with_edge.emplace_back(std::min(u, v), std::max(u, v));

    auto& best = with_edge.size() > without_edge.size() ? with_edge : without_edge;
    return {static_cast<int>(best.size()), Matching{std::move(best)}};
}

int matching_size(const Graph& g) {
    return matching_number(g).first;
}

} // namespace uniw
