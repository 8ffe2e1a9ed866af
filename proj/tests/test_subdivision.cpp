#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "eposa/gadgets.hpp"
#include "eposa/planarity.hpp"
#include "eposa/subdivision.hpp"
#include "oracles.hpp"

using namespace eposa;

TEST_CASE("basic subdivision findings") {
    Graph c3 = oracles::cycle_graph(3);
    Graph c6 = oracles::cycle_graph(6);
    auto emb = find_subdivision(c3, c6);
    REQUIRE(emb.has_value());
    CHECK(validate_embedding(c3, c6, *emb));

    CHECK_FALSE(find_subdivision(oracles::complete_graph(4), c6).has_value());
    CHECK(find_subdivision(oracles::complete_graph(4), oracles::complete_graph(4)).has_value());

    // the 3-cube carries a K4 subdivision
    Graph cube = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                              {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    auto k4_in_cube = find_subdivision(oracles::complete_graph(4), cube);
    REQUIRE(k4_in_cube.has_value());
    CHECK(validate_embedding(oracles::complete_graph(4), cube, *k4_in_cube));
}

TEST_CASE("embedded image has degree-2 interiors and matching branch degrees") {
    Graph k4 = oracles::complete_graph(4);
    Graph host = multiply_edge(k4, Edge(0, 1), 1);  // subdivide one edge
    auto emb = find_subdivision(k4, host);
    REQUIRE(emb.has_value());
    CHECK(validate_embedding(k4, host, *emb));

    std::map<VertexId, int> image_degree;
    for (const auto& p : emb->edge_paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            ++image_degree[p[i]];
            ++image_degree[p[i + 1]];
        }
    std::set<VertexId> branch(emb->branch.begin(), emb->branch.end());
    for (const auto& [v, deg] : image_degree) {
        if (branch.count(v)) continue;
        CHECK(deg == 2);
    }
    for (VertexId hv = 0; hv < k4.vertex_count(); ++hv)
        CHECK(image_degree[emb->branch[static_cast<size_t>(hv)]] == k4.degree(hv));
}

TEST_CASE("planarity cross-check: Kuratowski subdivisions") {
    Graph k5 = oracles::complete_graph(5);
    Graph k33 = oracles::complete_bipartite(3, 3);
    std::mt19937 rng(41);
    for (int t = 0; t < 60; ++t) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = oracles::random_graph(rng, n, 0.5);
        bool kuratowski_free =
            !find_subdivision(k5, g).has_value() && !find_subdivision(k33, g).has_value();
        CHECK(is_planar(g) == kuratowski_free);
    }
}

TEST_CASE("enumeration counts embeddings of C3 into C6") {
    Graph c3 = oracles::cycle_graph(3);
    Graph c6 = oracles::cycle_graph(6);
    std::uint64_t count = 0;
    enumerate_subdivisions(c3, c6, [&](const Embedding& emb) {
        CHECK(validate_embedding(c3, c6, emb));
        ++count;
        return false;
    });
    // 20 vertex triples, 3! branch bijections each, paths forced
    CHECK(count == 120);
}

TEST_CASE("midpoint canonicalization: canonical count times factors equals the raw count") {
    Graph k2 = build_graph({{0, 1}});
    Graph theta = multiply_edge(k2, Edge(0, 1), 3);

    double expanded = 0;
    std::uint64_t canonical = 0;
    enumerate_subdivisions(k2, theta, [&](const Embedding& emb) {
        ++canonical;
        expanded += midpoint_expansion_factor(theta, emb);
        return false;
    });

    // same graph with the labels stripped: no canonicalization
    GraphBuilder raw;
    raw.ensure_vertex(theta.vertex_count() - 1);
    for (const Edge& e : theta.edges()) raw.add_edge(e.u, e.v);
    Graph unlabeled = raw.build();
    std::uint64_t all = 0;
    enumerate_subdivisions(k2, unlabeled, [&](const Embedding&) {
        ++all;
        return false;
    });
    CHECK(canonical < all);
    CHECK(expanded == static_cast<double>(all));
}

TEST_CASE("find_subdivision respects the node budget") {
    Graph h = oracles::complete_graph(4);
    Graph g = elementary_wall(3, 3).graph;
    Budget tiny(10);
    CHECK_THROWS_AS(find_subdivision(h, g, &tiny), ResourceLimitError);
}

TEST_CASE("isomorphism via subdivision search") {
    CHECK(is_isomorphic(oracles::cycle_graph(5), oracles::cycle_graph(5)));
    CHECK_FALSE(is_isomorphic(oracles::cycle_graph(5), oracles::path_graph(5)));
    CHECK_FALSE(is_isomorphic(oracles::cycle_graph(6), oracles::complete_bipartite(3, 3)));

    // relabeled wall'
    Wall w = wall_prime(3, 3);
    const int n = w.graph.vertex_count();
    GraphBuilder b;
    b.ensure_vertex(n - 1);
    for (const Edge& e : w.graph.edges()) b.add_edge((e.u + 5) % n, (e.v + 5) % n);
    CHECK(is_isomorphic(w.graph, b.build()));

    // prism vs K33: both cubic on 6 vertices, not isomorphic
    CHECK_FALSE(is_isomorphic(wall_prime(2, 2).graph, oracles::complete_bipartite(3, 3)));
}
