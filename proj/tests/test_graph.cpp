#include <random>
#include <sstream>

#include "doctest.h"
#include "matchex/graph.hpp"
#include "oracles.hpp"

using matchex::CapacityError;
using matchex::Face;
using matchex::Graph;

TEST_CASE("complete graphs") {
    CHECK(Graph::complete(1).edge_count() == 0);
    CHECK(Graph::complete(6).edge_count() == 15);

    Graph k4 = Graph::complete(4);
    std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(k4.edges() == expected);

    CHECK_THROWS_AS(Graph::complete(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph::complete(17), CapacityError); // 136 edges > 128 bits
}

TEST_CASE("complete bipartite graphs") {
    Graph k22 = Graph::complete_bipartite(2, 2);
    std::vector<std::pair<int, int>> expected = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
    CHECK(k22.edges() == expected);
    REQUIRE(k22.bipartition().has_value());
    CHECK(k22.bipartition()->left == 2);

    CHECK(Graph::complete_bipartite(3, 3).edge_count() == 9);

    Graph k41 = Graph::complete_bipartite(4, 1);
    CHECK(k41.edge_count() == 4);
    for (const auto& [u, v] : k41.edges()) CHECK(v == 5); // all incident to b_1

    CHECK_THROWS_AS(Graph::complete_bipartite(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Graph::complete_bipartite(2, 0), std::invalid_argument);
}

TEST_CASE("from_edge_list normalizes") {
    // The four-vertex example graph: e1={1,2}, e2={1,3}, e3={1,4}, e4={2,3}.
    Graph g = Graph::from_edge_list(4, {{2, 1}, {1, 3}, {1, 4}, {3, 2}});
    std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 3}, {1, 4}, {2, 3}};
    CHECK(g.edges() == expected);

    CHECK(Graph::from_edge_list(3, {}).edge_count() == 0);
    CHECK(Graph::from_edge_list(2, {{1, 2}, {2, 1}}).edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{2, 2}}), std::invalid_argument);
}

TEST_CASE("edge index round-trips") {
    for (const Graph& g : {Graph::complete(6), Graph::complete_bipartite(3, 4),
                           Graph::from_edge_list(5, {{1, 5}, {2, 3}, {4, 5}})}) {
        for (int i = 0; i < g.edge_count(); ++i) {
            auto [u, v] = g.edge(i);
            CHECK(g.edge_index(u, v) == i);
            CHECK(g.edge_index(v, u) == i);
        }
    }
    CHECK_THROWS_AS(Graph::complete(3).edge_index(1, 5), std::invalid_argument);
}

TEST_CASE("subgraph degrees") {
    Graph k4 = Graph::complete(4);
    CHECK(k4.subgraph_degrees(Face()) == std::vector<int>{0, 0, 0, 0});

    Graph fig = Graph::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}});
    Face H = Face::from_positions({0, 1, 3}); // e1, e2, e4
    CHECK(fig.subgraph_degrees(H) == std::vector<int>{2, 2, 2, 0});

    Graph k3 = Graph::complete(3);
    CHECK(k3.subgraph_degrees(k3.full_edge_set()) == std::vector<int>{2, 2, 2});
}

TEST_CASE("degree sum is twice the edge count") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(rng, 7);
        std::uniform_int_distribution<std::uint64_t> mask(0, (1ULL << g.edge_count()) - 1);
        Face H(g.edge_count() ? mask(rng) : 0, 0);
        auto deg = g.subgraph_degrees(H);
        int sum = 0;
        for (int d : deg) sum += d;
        CHECK(sum == 2 * H.cardinality());
    }
}

TEST_CASE("domination number") {
    // Any single vertex dominates a complete graph.
    for (int n : {2, 4, 6}) {
        Graph g = Graph::complete(n);
        CHECK(g.domination_number(g.full_edge_set()) == 1);
    }

    // Perfect matching on six vertices.
    Graph pm = Graph::from_edge_list(6, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(oracles::domination_number(pm, pm.full_edge_set()) == 3);
    CHECK(pm.domination_number(pm.full_edge_set()) == 3);

    // Six-cycle.
    Graph c6 = Graph::from_edge_list(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    CHECK(oracles::domination_number(c6, c6.full_edge_set()) == 2);
    CHECK(c6.domination_number(c6.full_edge_set()) == 2);

    // Empty edge set: every vertex must be chosen.
    Graph g5 = Graph::from_edge_list(5, {});
    CHECK(g5.domination_number(Face()) == 5);
}

TEST_CASE("domination agrees with brute force and is antitone") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(rng, 6);
        if (g.edge_count() == 0) continue;
        std::uniform_int_distribution<std::uint64_t> mask(0, (1ULL << g.edge_count()) - 1);
        Face big(mask(rng), 0);
        Face small = big;
        for (int p = big.lowest(); p >= 0; p = big.next(p + 1))
            if (rng() % 2) small.clear(p);

        int dom_small = g.domination_number(small);
        int dom_big = g.domination_number(big);
        CHECK(dom_small == oracles::domination_number(g, small));
        CHECK(dom_big == oracles::domination_number(g, big));
        CHECK(dom_small >= dom_big); // removing edges cannot help domination

        for (int gamma = 1; gamma <= g.vertex_count(); ++gamma)
            CHECK(g.domination_at_least(big, gamma) == (dom_big >= gamma));
    }
}

TEST_CASE("edge list io") {
    Graph g = Graph::from_edge_list(5, {{4, 2}, {1, 5}, {2, 3}});
    std::stringstream s;
    g.write_edge_list(s);
    CHECK(s.str() == "5 3\n1 5\n2 3\n2 4\n");
    Graph back = Graph::read_edge_list(s);
    CHECK(back.vertex_count() == 5);
    CHECK(back.edges() == g.edges());

    std::stringstream bad("3");
    CHECK_THROWS_AS(Graph::read_edge_list(bad), std::runtime_error);
    std::stringstream truncated("3 2\n1 2\n");
    CHECK_THROWS_AS(Graph::read_edge_list(truncated), std::runtime_error);
}
