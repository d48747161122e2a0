#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "uniw/canonical.hpp"
#include "uniw/constructions.hpp"
#include "uniw/decompose.hpp"
#include "uniw/enumeration.hpp"
#include "uniw/graph.hpp"
#include "uniw/matching.hpp"

using namespace uniw;

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), input_error);
    Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("bfs distances on cycle, path and star") {
    CHECK(bfs_distances(oracle::cycle_graph(5), 0) == std::vector<int>{0, 1, 2, 2, 1});
    CHECK(bfs_distances(oracle::path_graph(4), 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(bfs_distances(oracle::star_graph(4), 0) == std::vector<int>{0, 1, 1, 1, 1});
    CHECK_THROWS_AS(bfs_distances(oracle::path_graph(4), 7), input_error);
    CHECK_THROWS_AS(bfs_distances(Graph::from_edges(3, {{0, 1}}), 0), class_error);
}

TEST_CASE("wiener index on small graphs") {
    CHECK(wiener_index(Graph::from_edges(2, {{0, 1}})) == 1);
    CHECK(wiener_index(oracle::cycle_graph(3)) == 3);
    CHECK(wiener_index(oracle::cycle_graph(4)) == 8);
    CHECK(wiener_index(oracle::path_graph(4)) == 10);
    CHECK(wiener_index(Graph::from_edges(1, {})) == 0);
    CHECK_THROWS_AS(wiener_index(Graph::from_edges(4, {{0, 1}, {2, 3}})), class_error);
}

TEST_CASE("wiener index agrees with Floyd-Warshall on random connected graphs") {
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_connected_graph(rng, 2 + trial % 9, trial % 4);
        CHECK(wiener_index(g) == oracle::fw_wiener(g));
    }
}

TEST_CASE("wiener index is half the sum of vertex transmissions") {
    auto holds = [](const Graph& gr) {
        long long sum = 0;
        for (int v = 0; v < gr.vertex_count(); ++v) sum += vertex_transmission(gr, v);
        return sum == 2 * wiener_index(gr);
    };
    for (int n = 3; n <= 10; ++n)
        for (int g = 3; g <= n; ++g)
            for (const auto& gr : gen_unicyclic(n, g)) CHECK(holds(gr));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial)
        CHECK(holds(oracle::random_connected_graph(rng, 2 + trial % 9, trial % 5)));
}

TEST_CASE("vertex transmission") {
    auto star = oracle::star_graph(4);
    CHECK(vertex_transmission(star, 0) == 4);
    CHECK(vertex_transmission(star, 1) == 7);
    auto t = build_star_like({3, 1});
    CHECK(vertex_transmission(t.graph, t.root) == 10);
    CHECK(vertex_transmission(t.graph, t.root) == oracle::fw_transmission(t.graph, t.root));
}

TEST_CASE("girth") {
    CHECK(girth(oracle::cycle_graph(7)) == 7);
    for (int g = 3; g <= 12; ++g) CHECK(girth(oracle::cycle_graph(g)) == g);
    // triangle with one pendant vertex
    CHECK(girth(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}})) == 3);
    CHECK_FALSE(girth(oracle::path_graph(6)).has_value());
    CHECK_FALSE(girth(oracle::star_graph(5)).has_value());
    CHECK_FALSE(girth(Graph::from_edges(1, {})).has_value());
    CHECK(girth(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}})) == 3);
}

TEST_CASE("matching number on known graphs") {
    auto [c5, w5] = matching_number(oracle::cycle_graph(5));
    CHECK(c5 == 2);
    CHECK(is_valid_matching(oracle::cycle_graph(5), w5));

    auto t = build_star_like({2, 3});
    CHECK(matching_size(t.graph) == 3);

    Graph gstar = construct_gstar({10, 3, 5});
    auto [b, w] = matching_number(gstar);
    CHECK(b == 5);
    CHECK(is_valid_matching(gstar, w));
    CHECK(b == oracle::exponential_matching(gstar));
}

TEST_CASE("matching number equals the exponential oracle on unicyclic graphs") {
    for (int n = 3; n <= 9; ++n)
        for (int g = 3; g <= n; ++g)
            for (const auto& gr : gen_unicyclic(n, g)) {
                auto [b, w] = matching_number(gr);
                CHECK(b == oracle::exponential_matching(gr));
                CHECK(is_valid_matching(gr, w));
            }
}

TEST_CASE("matching number rejects graphs with two independent cycles") {
    // theta graph
    CHECK_THROWS_AS(matching_size(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}})),
                    class_error);
    // two disjoint triangles
    CHECK_THROWS_AS(
        matching_size(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})),
        class_error);
    // disconnected forest is fine
    CHECK(matching_size(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 2);
    // one cycle plus an isolated vertex is still a supported class
    CHECK(matching_size(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}})) == 1);
}

TEST_CASE("unicyclic decomposition on known graphs") {
    auto d6 = decompose_unicyclic(oracle::cycle_graph(6));
    CHECK(d6.girth() == 6);
    CHECK(d6.branch_orders == std::vector<int>(6, 1));

    auto dg = decompose_unicyclic(construct_gstar({10, 3, 5}));
    CHECK(dg.branch_orders == std::vector<int>{8, 1, 1});

    // triangle with a pendant at the second cycle vertex
    auto d = decompose_unicyclic(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}}));
    CHECK(d.cycle == std::vector<int>{0, 1, 2});
    CHECK(d.branch_orders == std::vector<int>{1, 2, 1});
}

TEST_CASE("decomposition rejects anything that is not unicyclic") {
    CHECK_THROWS_AS(decompose_unicyclic(oracle::path_graph(5)), class_error);
    CHECK_THROWS_AS(
        decompose_unicyclic(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 2}})),
        class_error);
    CHECK_THROWS_AS(
        decompose_unicyclic(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})),
        class_error);
}

TEST_CASE("cycle normalization starts at the smallest id toward its smaller neighbor") {
    // C_5 with labels arranged so the neighbors of 0 are 2 and 4
    auto g = Graph::from_edges(5, {{0, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 0}});
    auto d = decompose_unicyclic(g);
    CHECK(d.cycle[0] == 0);
    CHECK(d.cycle[1] == 2);
    CHECK(d.cycle == std::vector<int>{0, 2, 3, 1, 4});
}

TEST_CASE("decompose then reassemble gives an isomorphic graph") {
    for (int n = 4; n <= 8; ++n)
        for (int g = 3; g <= n; ++g)
            for (const auto& gr : gen_unicyclic(n, g)) {
                auto d = decompose_unicyclic(gr);
                CHECK(d.girth() == girth(gr).value());
                auto rebuilt = build_cycle_assembly(d.girth(), branch_trees(gr, d));
                CHECK(unicyclic_isomorphic(gr, rebuilt));
            }
}

TEST_CASE("identify vertices on small cases") {
    Graph edge = Graph::from_edges(2, {{0, 1}});
    Graph p3 = identify_vertices(edge, 1, edge, 0);
    CHECK(p3.vertex_count() == 3);
    CHECK(wiener_index(p3) == 4);

    Graph k12 = oracle::star_graph(2);
    Graph k14 = identify_vertices(k12, 0, k12, 0);
    CHECK(wiener_index(k14) == 16);
    CHECK(k14.degree(0) == 4);

    auto t = build_star_like({3, 1});
    Graph joined = identify_vertices(oracle::cycle_graph(3), 0, t.graph, t.root);
    CHECK(wiener_index(joined) == 101);

    CHECK_THROWS_AS(identify_vertices(edge, 5, edge, 0), input_error);
    CHECK_THROWS_AS(identify_vertices(Graph::from_edges(3, {{0, 1}}), 0, edge, 0), class_error);
}

TEST_CASE("identify vertices satisfies the additive distance identity") {
    std::mt19937 rng(73);
    int done = 0;
    while (done < 200) {
        int n1 = 2 + static_cast<int>(rng() % 11);
        int n2 = 2 + static_cast<int>(rng() % 11);
        Graph g1 = (done % 2 == 0) ? oracle::random_rooted_tree(rng, n1).graph
                                   : oracle::cycle_graph(std::max(3, n1));
        Graph g2 = oracle::random_rooted_tree(rng, n2).graph;
        int x = static_cast<int>(rng() % g1.vertex_count());
        int y = static_cast<int>(rng() % g2.vertex_count());
        Graph joined = identify_vertices(g1, x, g2, y);
        long long expected = wiener_index(g1) + wiener_index(g2) +
                             vertex_transmission(g1, x) * (g2.vertex_count() - 1) +
                             vertex_transmission(g2, y) * (g1.vertex_count() - 1);
        CHECK(wiener_index(joined) == expected);
        ++done;
    }
}
