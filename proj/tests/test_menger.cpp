#include <random>

#include "doctest.h"
#include "eposa/gadgets.hpp"
#include "eposa/menger.hpp"
#include "oracles.hpp"

using namespace eposa;

TEST_CASE("separator on P3") {
    Graph p3 = build_graph({{0, 1}, {1, 2}});  // a=0, x=1, b=2
    auto sep = min_vertex_separator(p3, 0, {2}, 1);
    REQUIRE(sep.has_value());
    CHECK(sep->vertices == std::vector<VertexId>{1});
    CHECK(sep->side_a == std::vector<VertexId>{0});
    CHECK(sep->side_b == std::vector<VertexId>{2});
}

TEST_CASE("three internally disjoint routes defeat bound 2") {
    // three targets, each on its own route from a
    Graph g = build_graph({{0, 2}, {2, 5}, {0, 3}, {3, 6}, {0, 4}, {4, 7}});
    CHECK_FALSE(min_vertex_separator(g, 0, {5, 6, 7}, 2).has_value());
    auto sep = min_vertex_separator(g, 0, {5, 6, 7}, 3);
    REQUIRE(sep.has_value());
    CHECK(sep->vertices.size() == 3);

    // a single target shared by three routes: fans collapse at the target,
    // and cutting the target itself separates
    Graph h = build_graph({{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    CHECK(max_fan_size(h, 0, {1}) == 1);
    auto sep1 = min_vertex_separator(h, 0, {1}, 1);
    REQUIRE(sep1.has_value());
    CHECK(sep1->vertices == std::vector<VertexId>{1});
}

TEST_CASE("separator size equals the brute-force fan bound on random graphs") {
    std::mt19937 rng(31);
    for (int t = 0; t < 120; ++t) {
        int n = 4 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(rng, n, 0.4);
        VertexId a = 0;
        std::vector<VertexId> targets;
        for (VertexId v = 1; v < n; ++v)
            if (rng() % 3 == 0) targets.push_back(v);
        if (targets.empty()) targets.push_back(n - 1);

        int fan = oracles::max_fan_bruteforce(g, a, targets);
        CHECK(max_fan_size(g, a, targets) == fan);

        auto sep = min_vertex_separator(g, a, targets, n);
        REQUIRE(sep.has_value());
        CHECK(static_cast<int>(sep->vertices.size()) == fan);

        // the separator really separates
        std::set<VertexId> cut(sep->vertices.begin(), sep->vertices.end());
        CHECK_FALSE(cut.count(a));
        std::set<VertexId> target_set(targets.begin(), targets.end());
        std::vector<bool> seen(static_cast<size_t>(n), false);
        std::vector<VertexId> stack = {a};
        seen[0] = true;
        bool breached = false;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (target_set.count(v) && v != a) breached = true;
            for (VertexId w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)] && !cut.count(w)) {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        CHECK_FALSE(breached);
    }
}

TEST_CASE("three_fan witnesses") {
    Wall w = wall_prime(4, 4);
    // an inner branch vertex fans to its three neighbors
    VertexId center = w.rows[2][w.rows[2].size() / 2];
    std::vector<VertexId> nbs(w.graph.neighbors(center).begin(), w.graph.neighbors(center).end());
    auto fan = three_fan(w.graph, center, nbs);
    REQUIRE(fan.has_value());
    CHECK(validate_fan(w.graph, *fan, nbs));

    // middle of P5 to its endpoints: only two legs possible
    Graph p5 = oracles::path_graph(5);
    CHECK_FALSE(three_fan(p5, 2, {0, 4}).has_value());

    // z1 of the size-2 Heinlein wall fans to the terminals
    HeinleinWall hw = heinlein_wall(2);
    auto t = hw.terminals();
    std::vector<VertexId> terms(t.begin(), t.end());
    auto zfan = three_fan(hw.graph, hw.z[1], terms);
    REQUIRE(zfan.has_value());
    CHECK(validate_fan(hw.graph, *zfan, terms));
}

TEST_CASE("compute_b_m") {
    Wall w = wall_prime(4, 4);
    std::vector<VertexId> branch;
    for (VertexId v = 0; v < w.graph.vertex_count(); ++v) branch.push_back(v);
    std::vector<VertexId> bm = compute_b_m(w.graph, branch);
    CHECK(bm == branch);  // every proper branch vertex fans into the rest

    // a pendant vertex is excluded
    GraphBuilder b;
    b.ensure_vertex(w.graph.vertex_count() - 1);
    for (const Edge& e : w.graph.edges()) b.add_edge(e.u, e.v);
    VertexId pendant = b.add_vertex();
    b.add_edge(pendant, 0);
    Graph with_pendant = b.build();
    std::vector<VertexId> bm2 = compute_b_m(with_pendant, branch);
    for (VertexId v : bm2) CHECK(v != pendant);

    // a vertex joined by three disjoint length-2 paths to branch vertices is
    // included
    GraphBuilder b2;
    b2.ensure_vertex(w.graph.vertex_count() - 1);
    for (const Edge& e : w.graph.edges()) b2.add_edge(e.u, e.v);
    VertexId hub = b2.add_vertex();
    for (VertexId t : {0, 1, 2}) {
        VertexId mid = b2.add_vertex();
        b2.add_edge(hub, mid);
        b2.add_edge(mid, t);
    }
    std::vector<VertexId> bm3 = compute_b_m(b2.build(), branch);
    CHECK(std::count(bm3.begin(), bm3.end(), hub) == 1);
}
