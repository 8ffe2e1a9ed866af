#include <random>
#include <set>

#include "doctest.h"
#include "eposa/gadgets.hpp"
#include "eposa/subdivision.hpp"
#include "oracles.hpp"

using namespace eposa;

TEST_CASE("heinlein wall size 1 matches the hand enumeration") {
    HeinleinWall w = heinlein_wall(1);
    CHECK(w.graph.vertex_count() == 6);
    CHECK(w.graph.edge_count() == 6);
    // a*=0, b*=1, z0=2, z1=3, u11=4, u12=5
    std::vector<std::pair<VertexId, VertexId>> expected = {{0, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    Graph ref = build_graph(expected);
    CHECK(graphs_equal(w.graph, ref));
    CHECK(w.a == 0);
    CHECK(w.c() == 2);
    CHECK(w.d() == 3);
}

TEST_CASE("heinlein wall counts and degree table for r = 1..6") {
    for (int r = 1; r <= 6; ++r) {
        HeinleinWall w = heinlein_wall(r);
        CHECK(w.graph.vertex_count() == 2 * r * r + r + 3);
        CHECK(w.graph.edge_count() == 4 * r * r + 2 * r);
        CHECK(w.graph.degree(w.a) == r);
        CHECK(w.graph.degree(w.b) == r);
        CHECK(w.graph.degree(w.z.front()) == r + 1);
        CHECK(w.graph.degree(w.z.back()) == r + 1);
        for (int j = 1; j < r; ++j) CHECK(w.graph.degree(w.z[static_cast<size_t>(j)]) == 2 * r + 2);
        for (const auto& p : w.path_vertices)
            for (VertexId v : p) CHECK(w.graph.degree(v) == 3);
        CHECK(static_cast<int>(w.interior().size()) == w.graph.vertex_count() - 4);
    }
    HeinleinWall w2 = heinlein_wall(2);
    CHECK(w2.graph.degree(w2.z[1]) == 6);
    HeinleinWall w5 = heinlein_wall(5);
    CHECK(w5.graph.vertex_count() == 58);
    CHECK(w5.graph.edge_count() == 110);
    CHECK_THROWS_AS(heinlein_wall(0), InvalidSizeError);
}

TEST_CASE("elementary grid") {
    Graph g11 = elementary_grid(1, 1);
    CHECK(g11.vertex_count() == 1);
    CHECK(g11.edge_count() == 0);

    Graph g22 = elementary_grid(2, 2);
    CHECK(graphs_equal(g22, build_graph({{0, 1}, {0, 2}, {1, 3}, {2, 3}})));  // C4

    Graph g34 = elementary_grid(3, 4);
    CHECK(g34.vertex_count() == 12);
    CHECK(g34.edge_count() == 3 * 3 + 4 * 2);
    CHECK_THROWS_AS(elementary_grid(0, 3), InvalidSizeError);
}

TEST_CASE("elementary wall of size 1x1 is the 6-cycle") {
    Wall w = elementary_wall(1, 1);
    CHECK(w.graph.vertex_count() == 6);
    CHECK(w.graph.edge_count() == 6);
    CHECK(cycle_rank(w.graph) == 1);
    CHECK(w.bricks.size() == 1);
    CHECK(w.outercycle.size() == 6);
}

TEST_CASE("elementary wall sizes, bricks and trimming") {
    Wall w22 = elementary_wall(2, 2);
    CHECK(w22.graph.vertex_count() == 16);  // (m+1)(2n+2) - 2
    CHECK(cycle_rank(w22.graph) == 4);

    Wall w88 = elementary_wall(8, 8);
    CHECK(cycle_rank(w88.graph) == 64);

    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            Wall w = elementary_wall(m, n);
            CHECK(w.graph.vertex_count() == (m + 1) * (2 * n + 2) - 2);
            CHECK(cycle_rank(w.graph) == m * n);
            CHECK(vertices_of_degree(w.graph, 0).empty());
            CHECK(vertices_of_degree(w.graph, 1).empty());
            CHECK(static_cast<int>(w.bricks.size()) == m * n);
            // bricks are chordless 6-cycles, and they are ALL the 6-cycles
            std::set<std::vector<VertexId>> brick_sets;
            for (const Brick& b : w.bricks) {
                CHECK(b.cycle.size() == 6);
                int inside = 0;
                std::set<VertexId> cyc(b.cycle.begin(), b.cycle.end());
                for (const Edge& e : w.graph.edges())
                    if (cyc.count(e.u) && cyc.count(e.v)) ++inside;
                CHECK(inside == 6);  // exactly the cycle edges, no chord
                std::vector<VertexId> key(b.cycle.begin(), b.cycle.end());
                std::sort(key.begin(), key.end());
                brick_sets.insert(key);
            }
            CHECK(brick_sets == oracles::all_hexagons(w.graph));
            // rows and columns are paths, every vertex in exactly one row
            std::set<VertexId> seen;
            for (const auto& row : w.rows) {
                for (size_t i = 0; i + 1 < row.size(); ++i) CHECK(w.graph.has_edge(row[i], row[i + 1]));
                for (VertexId v : row) CHECK(seen.insert(v).second);
            }
            CHECK(static_cast<int>(seen.size()) == w.graph.vertex_count());
            std::set<VertexId> on_col;
            for (const auto& col : w.columns) {
                for (size_t i = 0; i + 1 < col.size(); ++i) CHECK(w.graph.has_edge(col[i], col[i + 1]));
                for (VertexId v : col) CHECK(on_col.insert(v).second);
            }
        }
}

TEST_CASE("wall' is cubic with the right cycle rank") {
    CHECK_THROWS_AS(wall_prime(1, 1), DegenerateWallError);

    Wall w22 = wall_prime(2, 2);
    CHECK(w22.graph.vertex_count() == 6);
    CHECK(cycle_rank(w22.graph) == 4);
    for (VertexId v = 0; v < w22.graph.vertex_count(); ++v) CHECK(w22.graph.degree(v) == 3);

    Wall w43 = wall_prime(4, 3);
    CHECK(cycle_rank(w43.graph) == 12);
    CHECK(w43.graph.max_degree() == 3);
}

TEST_CASE("wall' equals suppressed elementary wall, for all desk sizes") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            if (m == 1 || n == 1) {
                // single-strip walls contract to multigraphs; both routes
                // must agree on rejecting them
                CHECK_THROWS_AS(wall_prime(m, n), DegenerateWallError);
                CHECK_THROWS_AS(suppress_degree_two(elementary_wall(m, n).graph), DegenerateContractionError);
                continue;
            }
            Wall direct = wall_prime(m, n);
            Graph contracted = suppress_degree_two(elementary_wall(m, n).graph);
            CHECK(graphs_equal(direct.graph, contracted));  // same survivor numbering
            CHECK(is_isomorphic(direct.graph, contracted));
            CHECK(cycle_rank(direct.graph) == m * n);
        }
}

TEST_CASE("wall' geometry carries over") {
    Wall w = wall_prime(4, 4);
    CHECK(w.rows.size() == 5);
    CHECK(w.columns.size() == 5);
    CHECK(w.bricks.size() == 16);
    for (const Brick& b : w.bricks) {
        CHECK(b.cycle.size() >= 3);
        for (size_t i = 0; i < b.cycle.size(); ++i)
            CHECK(w.graph.has_edge(b.cycle[i], b.cycle[(i + 1) % b.cycle.size()]));
    }
    std::set<VertexId> oc(w.outercycle.begin(), w.outercycle.end());
    for (VertexId v : w.rows.front()) CHECK(oc.count(v));
    for (VertexId v : w.rows.back()) CHECK(oc.count(v));
    for (VertexId v : w.columns.front()) CHECK(oc.count(v));
    for (VertexId v : w.columns.back()) CHECK(oc.count(v));
}

TEST_CASE("multiply_edge") {
    Graph k2 = build_graph({{0, 1}});
    Graph p3 = multiply_edge(k2, Edge(0, 1), 1);
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);

    Graph theta = multiply_edge(k2, Edge(0, 1), 3);
    CHECK(theta.vertex_count() == 5);
    CHECK(theta.edge_count() == 6);

    Graph c3 = oracles::cycle_graph(3);
    Graph m = multiply_edge(c3, Edge(0, 1), 2);
    CHECK(m.vertex_count() == 5);
    CHECK(m.edge_count() == 6);
    CHECK(m.degree(0) == 3);
    CHECK(m.degree(1) == 3);
    CHECK(m.label(3).kind == RoleKind::Midpoint);

    CHECK_THROWS_AS(multiply_edge(c3, Edge(0, 1), 0), InvalidSizeError);
    CHECK_THROWS_AS(multiply_edge(k2, Edge(0, 2), 1), UnknownEdgeError);
}

TEST_CASE("multiply_edge round trip: contracting the midpoints recovers g") {
    std::mt19937 rng(17);
    int done = 0;
    for (int t = 0; t < 200 && done < 100; ++t) {
        Graph g = oracles::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.5);
        if (g.edge_count() == 0) continue;
        Edge e = g.edges()[rng() % g.edges().size()];
        int k = 1 + static_cast<int>(rng() % 4);
        Graph m = multiply_edge(g, e, k);
        // delete the midpoints, restore the edge
        std::vector<VertexId> keep;
        for (VertexId v = 0; v < g.vertex_count(); ++v) keep.push_back(v);
        auto [restored_base, map] = induced_subgraph(m, keep);
        GraphBuilder b;
        b.ensure_vertex(restored_base.vertex_count() - 1);
        for (const Edge& f : restored_base.edges()) b.add_edge(f.u, f.v);
        b.add_edge(e.u, e.v);
        CHECK(graphs_equal(b.build(), g));
        ++done;
    }
    CHECK(done == 100);
}
