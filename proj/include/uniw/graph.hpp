#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "uniw/errors.hpp"

namespace uniw {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1.
// Adjacency lists are kept sorted; construction rejects self-loops,
// duplicate edges and out-of-range ids.
class Graph {
  public:
    Graph() = default;
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;  // sorted, u < v in each pair

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// A tree with a designated root vertex.
struct RootedTree {
    Graph graph;
    int root = 0;
    int order() const { return graph.vertex_count(); }
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);  // connected with |E| = |V|

// Hop counts from source to every vertex.
// Throws class_error when some vertex is unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

// Sum of distances from v to all other vertices.
long long vertex_transmission(const Graph& g, int v);

// Sum of distances over all unordered vertex pairs.
long long wiener_index(const Graph& g);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// keep[v] selects vertices; ids are remapped to 0..k-1 in increasing order.
Graph induced_subgraph(const Graph& g, const std::vector<char>& keep);

// Glue g2 at vertex y onto g1 at vertex x. Vertices of g1 keep their ids;
// the remaining vertices of g2 follow in id order.
Graph identify_vertices(const Graph& g1, int x, const Graph& g2, int y);

} // namespace uniw
