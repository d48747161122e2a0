#include "uniw/edgelist.hpp"

#include <set>
#include <sstream>

namespace uniw {

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw parse_error(parse_error::kind::bad_token, "edge list: expected header \"n m\"");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(in >> u >> v))
            throw parse_error(parse_error::kind::bad_token,
                              "edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(k));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(parse_error::kind::vertex_out_of_range,
                              "edge list: vertex id out of range in edge " + std::to_string(k));
        if (u == v)
            throw parse_error(parse_error::kind::self_loop,
                              "edge list: self-loop at vertex " + std::to_string(u));
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second)
            throw parse_error(parse_error::kind::duplicate_edge,
                              "edge list: duplicate edge " + std::to_string(e.first) + " " +
                                  std::to_string(e.second));
        edges.push_back(e);
    }
    std::string rest;
    if (in >> rest)
        throw parse_error(parse_error::kind::bad_token, "edge list: trailing data \"" + rest + "\"");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace uniw
