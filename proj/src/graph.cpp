#include "uniw/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace uniw {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                              " out of range for " + std::to_string(n) + " vertices");
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw input_error("duplicate edge");
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw input_error("vertex id " + std::to_string(v) + " out of range");
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_) throw input_error("vertex id " + std::to_string(v) + " out of range");
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// BFS without reachability requirements; unreachable vertices stay at -1.
std::vector<int> bfs_raw(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_raw(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_unicyclic(const Graph& g) {
    return g.edge_count() == g.vertex_count() && is_connected(g);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw input_error("bfs source " + std::to_string(source) + " out of range");
    auto dist = bfs_raw(g, source);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] < 0)
            throw class_error("vertex " + std::to_string(v) + " unreachable from " +
                              std::to_string(source));
    return dist;
}

long long vertex_transmission(const Graph& g, int v) {
    auto dist = bfs_distances(g, v);
    long long sum = 0;
    for (int d : dist) sum += d;
    return sum;
}

long long wiener_index(const Graph& g) {
    if (g.vertex_count() < 1) throw input_error("Wiener index needs at least one vertex");
    long long total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_raw(g, v);
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (dist[u] < 0)
                throw class_error("Wiener index undefined for disconnected graphs");
            total += dist[u];
        }
    }
    // every unordered pair counted once from each side
    return total / 2;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w && parent[w] != u) {
                    // non-tree edge closes a cycle through s of at most this length
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

Graph induced_subgraph(const Graph& g, const std::vector<char>& keep) {
    if (static_cast<int>(keep.size()) != g.vertex_count())
        throw input_error("keep mask size mismatch");
    std::vector<int> id(g.vertex_count(), -1);
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) id[v] = k++;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (keep[u] && keep[v]) edges.emplace_back(id[u], id[v]);
    return Graph::from_edges(k, edges);
}

Graph identify_vertices(const Graph& g1, int x, const Graph& g2, int y) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (x < 0 || x >= n1) throw input_error("identify: vertex x out of range");
    if (y < 0 || y >= n2) throw input_error("identify: vertex y out of range");
    if (!is_connected(g1) || !is_connected(g2))
        throw class_error("identify: both graphs must be connected");
    auto map2 = [&](int v) { return v == y ? x : n1 + (v > y ? v - 1 : v); };
    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(map2(u), map2(v));
    return Graph::from_edges(n1 + n2 - 1, edges);
}

} // namespace uniw
