#include <set>

#include "doctest.h"
#include "eposa/gadgets.hpp"
#include "eposa/hitting.hpp"
#include "eposa/io.hpp"
#include "eposa/linkage.hpp"
#include "eposa/subdivision.hpp"
#include "eposa/wall_geom.hpp"
#include "oracles.hpp"

using namespace eposa;

namespace {

WallDesignation identity_designation(const Wall& w) {
    WallDesignation d;
    d.wall = w;
    for (VertexId v = 0; v < w.graph.vertex_count(); ++v) d.to_host.push_back(v);
    return d;
}

CounterexampleInstance tiny_instance(int r = 1) {
    Wall w = wall_prime(2, 2);
    EdgePair p = select_far_edge_pair(w, 0);
    return build_z(w.graph, identity_designation(w), Edge(p.a, p.b), Edge(p.c, p.d), r, 0);
}

}  // namespace

TEST_CASE("build_z matches the size formula") {
    CounterexampleInstance inst = tiny_instance();
    const Graph& h = inst.pattern;
    CHECK(h.vertex_count() == 6);
    CHECK(h.edge_count() == 9);
    CHECK(inst.z.vertex_count() == h.vertex_count() + 2 * (h.edge_count() - 2) + 8 + 2 - 1);
    CHECK(inst.families.size() == 7);
    for (const auto& fam : inst.families) CHECK(fam.midpoints.size() == 2);

    Wall w33 = wall_prime(3, 3);
    EdgePair p = select_far_edge_pair(w33, 0);
    CounterexampleInstance big = build_z(w33.graph, identity_designation(w33), Edge(p.a, p.b), Edge(p.c, p.d), 1, 0);
    CHECK(big.z.vertex_count() == 16 + 2 * (24 - 2) + 9);
}

TEST_CASE("build_z validates its inputs") {
    Wall w = wall_prime(2, 2);
    WallDesignation d = identity_designation(w);

    CHECK_THROWS_AS(build_z(oracles::complete_graph(5), d, Edge(0, 1), Edge(2, 3), 1, 0), NotSubcubicError);

    EdgePair p = select_far_edge_pair(w, 0);
    CHECK_THROWS_AS(build_z(w.graph, d, Edge(p.a, p.b), Edge(p.a, p.b), 1, 0), BadIncidenceError);
    CHECK_THROWS_AS(build_z(w.graph, d, Edge(p.a, p.b), Edge(p.c, p.d), 0, 0), InvalidSizeError);

    // edges sharing an endvertex are never far apart
    VertexId a = 0;
    auto nbs = w.graph.neighbors(a);
    CHECK_THROWS_AS(build_z(w.graph, d, Edge(a, nbs[0]), Edge(a, nbs[1]), 1, 0), EdgesNotFarApartError);

    // two disjoint edges within one brick of a 3x3 wall' fail min_apart = 2
    Wall w33 = wall_prime(3, 3);
    const Brick& brick = w33.bricks[4];  // central brick
    REQUIRE(brick.cycle.size() == 6);
    Edge e1(brick.cycle[0], brick.cycle[1]);
    Edge e2(brick.cycle[3], brick.cycle[4]);
    CHECK_THROWS_AS(build_z(w33.graph, identity_designation(w33), e1, e2, 1, 2), EdgesNotFarApartError);
}

TEST_CASE("z reconstructs the pattern from families plus the removed edges") {
    CounterexampleInstance inst = tiny_instance();
    std::set<Edge> rebuilt;
    for (const auto& fam : inst.families) rebuilt.insert(fam.pattern_edge);
    rebuilt.insert(inst.e1);
    rebuilt.insert(inst.e2);
    std::set<Edge> original(inst.pattern.edges().begin(), inst.pattern.edges().end());
    CHECK(rebuilt == original);
}

TEST_CASE("instance sidecar json round trip") {
    CounterexampleInstance inst = tiny_instance();
    CounterexampleInstance back = instance_from_json(instance_to_json(inst));
    CHECK(graphs_equal(back.z, inst.z));
    CHECK(graphs_equal(back.pattern, inst.pattern));
    CHECK(back.star_map == inst.star_map);
    CHECK(back.wall.z == inst.wall.z);
    CHECK(back.wall_edges == inst.wall_edges);
    CHECK(back.m_star.branch_in_z == inst.m_star.branch_in_z);
    CHECK(back.r == inst.r);
    validate_instance(back);
}

TEST_CASE("the tiny instance carries an H-subdivision") {
    CounterexampleInstance inst = tiny_instance();
    auto emb = find_subdivision(inst.pattern, inst.z);
    REQUIRE(emb.has_value());
    CHECK(validate_embedding(inst.pattern, inst.z, *emb));
}

TEST_CASE("deleting the least midpoint's edge leaves the twins distinguishable") {
    // The canonical rule prefers the least unused midpoint; once one of its
    // edges is gone the copies are no longer interchangeable, and the sibling
    // route must stay admissible.
    CounterexampleInstance inst = tiny_instance();
    const MidpointFamily& fam = inst.families.front();
    VertexId m0 = fam.midpoints[0];
    VertexId g_star = inst.star_map[static_cast<size_t>(fam.pattern_edge.u)];
    Graph cut = delete_edges(inst.z, {Edge(g_star, m0)});
    Budget modest(200'000);
    auto emb = find_subdivision(inst.pattern, cut, &modest);
    REQUIRE(emb.has_value());
    CHECK(validate_embedding(inst.pattern, cut, *emb));
}

TEST_CASE("no hitting set of size 1 in the tiny instance") {
    CounterexampleInstance inst = tiny_instance();

    auto structural = check_no_hitting_set(inst, 1, CheckMode::Structural);
    CHECK(structural.pass);

    auto sampled = check_no_hitting_set(inst, 1, CheckMode::Sampled, 12345, 25);
    CHECK(sampled.pass);
    CHECK(sampled.cases == 25);

    auto exhaustive = check_no_hitting_set(inst, 1, CheckMode::Exhaustive);
    CHECK(exhaustive.pass);
    CHECK(exhaustive.cases == 1 + static_cast<std::uint64_t>(inst.z.edge_count()));

    CHECK_THROWS_AS(check_no_hitting_set(inst, 2, CheckMode::Exhaustive), InvalidSizeError);  // budget > r
}

TEST_CASE("budget 0 reduces to plain subdivision containment") {
    CounterexampleInstance inst = tiny_instance();
    auto rep = check_no_hitting_set(inst, 0, CheckMode::Exhaustive);
    CHECK(rep.pass);
    CHECK(rep.cases == 1);
}

TEST_CASE("linkage survey on the tiny instance") {
    CounterexampleInstance inst = tiny_instance();
    LinkageSurvey survey = all_subdivisions_contain_linkage(inst);
    CHECK(survey.embeddings > 0);
    CHECK(survey.conforming + survey.violating == survey.embeddings);
    CHECK(survey.expanded >= static_cast<double>(survey.embeddings));
}

TEST_CASE("linkage survey with an unembeddable pattern is a vacuous pass") {
    Graph host = oracles::path_graph(6);
    LinkageSurvey survey = linkage_survey(host, oracles::complete_graph(4), {}, {0, 1, 2, 3});
    CHECK(survey.embeddings == 0);
    CHECK(survey.conforming == 0);
    CHECK(survey.violating == 0);
}

TEST_CASE("linkage survey control: an undesignated terminal path shows violations") {
    // H minus e1, e2 with every surviving edge doubled, plus terminal paths
    // a-x1-b, a-x2-b, c-y-d; only the x1 and y paths are designated as the
    // wall, so embeddings routed through x2 must be reported as violations.
    Wall w = wall_prime(2, 2);
    Graph h = w.graph;
    EdgePair p = select_far_edge_pair(w, 0);
    Edge e1(p.a, p.b), e2(p.c, p.d);

    GraphBuilder b;
    b.ensure_vertex(h.vertex_count() - 1);
    int copy = 0;
    for (const Edge& e : h.edges()) {
        if (e == e1 || e == e2) continue;
        for (int k = 0; k < 2; ++k) {
            VertexId mid = b.add_vertex(RoleLabel::midpoint(e.u, e.v, k));
            b.add_edge(e.u, mid);
            b.add_edge(e.v, mid);
        }
        ++copy;
    }
    VertexId x1 = b.add_vertex(), x2 = b.add_vertex(), y = b.add_vertex();
    b.add_edge(p.a, x1);
    b.add_edge(x1, p.b);
    b.add_edge(p.a, x2);
    b.add_edge(x2, p.b);
    b.add_edge(p.c, y);
    b.add_edge(y, p.d);
    Graph host = b.build();

    std::vector<Edge> designated = {Edge(p.a, x1), Edge(x1, p.b), Edge(p.c, y), Edge(y, p.d)};
    LinkageSurvey survey = linkage_survey(host, h, designated, {p.a, p.b, p.c, p.d});
    CHECK(survey.embeddings > 0);
    CHECK(survey.violating > 0);   // the x2 routings miss the designated wall
    CHECK(survey.conforming > 0);  // the x1 routings use it
    REQUIRE(survey.violating_example.has_value());
    CHECK(validate_embedding(h, host, *survey.violating_example));
}
