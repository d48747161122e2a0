#include "uniw/decompose.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace uniw {

namespace {

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

CycleDecomposition decompose_unicyclic(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw class_error("decompose: graph is disconnected");
    if (g.edge_count() == n - 1) throw class_error("decompose: graph is a tree");
    if (g.edge_count() != n)
        throw class_error("decompose: graph has " + std::to_string(g.edge_count()) +
                          " edges on " + std::to_string(n) + " vertices; not unicyclic");

    auto on_cycle = two_core(g);

    // normalize: start at the smallest cycle id, step toward its smaller
    // cycle neighbor
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (on_cycle[v]) start = v;
    CycleDecomposition d;
    d.cycle.push_back(start);
    int prev = start, cur = -1;
    for (int w : g.neighbors(start))
        if (on_cycle[w]) {
            cur = w;
            break;
        }
    while (cur != start) {
        d.cycle.push_back(cur);
        int next = -1;
        for (int w : g.neighbors(cur))
            if (on_cycle[w] && w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
    }

    for (int ui : d.cycle) {
        CycleDecomposition::Branch br;
        br.root = ui;
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[ui] = 1;
        q.push(ui);
        br.vertices.push_back(ui);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (on_cycle[u] && on_cycle[w]) continue;  // cycle edge
                if (seen[w]) continue;
                seen[w] = 1;
                br.vertices.push_back(w);
                br.edges.emplace_back(u, w);
                q.push(w);
            }
        }
        d.branch_orders.push_back(static_cast<int>(br.vertices.size()));
        d.branches.push_back(std::move(br));
    }
    return d;
}

RootedTree branch_tree(const Graph& g, const CycleDecomposition& d, int i) {
    if (i < 0 || i >= d.girth()) throw input_error("branch index out of range");
    const auto& br = d.branches[i];
    std::vector<int> local(g.vertex_count(), -1);
    for (int k = 0; k < static_cast<int>(br.vertices.size()); ++k) local[br.vertices[k]] = k;
    std::vector<Edge> edges;
    edges.reserve(br.edges.size());
    for (const auto& [u, v] : br.edges) edges.emplace_back(local[u], local[v]);
    return RootedTree{Graph::from_edges(static_cast<int>(br.vertices.size()), edges), 0};
}

std::vector<RootedTree> branch_trees(const Graph& g, const CycleDecomposition& d) {
    std::vector<RootedTree> out;
    out.reserve(d.girth());
    for (int i = 0; i < d.girth(); ++i) out.push_back(branch_tree(g, d, i));
    return out;
}

DecompositionStats decomposition_stats(const Graph& g, const CycleDecomposition& d) {
    DecompositionStats s;
    s.girth = d.girth();
    s.order = g.vertex_count();
    for (int i = 0; i < d.girth(); ++i) {
        auto t = branch_tree(g, d, i);
        s.branch_orders.push_back(t.order());
        s.branch_wiener.push_back(t.order() >= 2 ? wiener_index(t.graph) : 0);
        s.branch_root_transmission.push_back(t.order() >= 2 ? vertex_transmission(t.graph, t.root)
                                                            : 0);
    }
    return s;
}

} // namespace uniw
