#ifndef EPOSA_GADGETS_HPP
#define EPOSA_GADGETS_HPP

#include <array>
#include <vector>

#include "eposa/graph.hpp"

namespace eposa {

// Heinlein wall of size r: terminals a*, b*, c* = z_0, d* = z_r, bottleneck
// vertices z_0..z_r and r horizontal paths P^j = u^j_1..u^j_{2r}.
// |V| = 2r^2 + r + 3, |E| = 4r^2 + 2r.
struct HeinleinWall {
    Graph graph;
    int r = 0;
    VertexId a = -1;
    VertexId b = -1;
    std::vector<VertexId> z;                          // z_0..z_r
    std::vector<std::vector<VertexId>> path_vertices; // [j-1][i-1] = u^j_i

    VertexId c() const { return z.front(); }
    VertexId d() const { return z.back(); }
    std::array<VertexId, 4> terminals() const { return {a, b, c(), d()}; }
    // W^0 = W minus the four terminals.
    std::vector<VertexId> interior() const;
};

HeinleinWall heinlein_wall(int r);

enum class WallKind { Elementary, Prime };

struct Brick {
    int row = 0;  // a in [m]
    int col = 0;  // b in [n]
    std::vector<VertexId> cycle;
};

struct Wall {
    Graph graph;
    WallKind kind = WallKind::Elementary;
    int m = 0;
    int n = 0;
    std::vector<std::vector<VertexId>> rows;     // m+1 row paths
    std::vector<std::vector<VertexId>> columns;  // n+1 column paths
    std::vector<Brick> bricks;                   // m*n bricks
    std::vector<VertexId> outercycle;
    std::vector<int> row_of;  // per vertex; always set
    std::vector<int> col_of;  // per vertex; -1 if on no column
};

Graph elementary_grid(int m, int n);
Wall elementary_wall(int m, int n);
// Elementary wall with all degree-2 vertices contracted; cubic. Degenerate
// (and rejected) when m = 1 or n = 1.
Wall wall_prime(int m, int n);

// Replaces e by k internally disjoint length-2 paths through fresh
// Midpoint-labeled vertices.
Graph multiply_edge(const Graph& g, Edge e, int k);

// A wall' designated inside a host graph: to_host maps wall vertex ids to
// host vertex ids.
struct WallDesignation {
    Wall wall;
    std::vector<VertexId> to_host;
};

struct MidpointFamily {
    Edge pattern_edge;                // edge of H (pattern ids)
    std::vector<VertexId> midpoints;  // the k midpoint vertices in Z
};

// Designated subdivision M* of M - e1 - e2 inside Z: branch vertices plus
// the chosen midpoint per subdivided edge.
struct MStar {
    std::vector<VertexId> branch_in_z;                    // wall vertex -> Z vertex
    std::vector<std::pair<Edge, VertexId>> edge_midpoint; // pattern edge -> chosen midpoint in Z
};

struct CounterexampleInstance {
    Graph z;
    Graph pattern;                    // H
    std::vector<VertexId> star_map;   // V(H) -> V(Z)
    std::vector<MidpointFamily> families;
    HeinleinWall wall;                // vertex ids live in Z
    std::vector<Edge> wall_edges;     // edges of W inside Z
    MStar m_star;
    int r = 0;
    Edge e1, e2;
    int min_apart = 0;
};

// Builds the counterexample graph Z from a subcubic pattern H with a
// designated wall' M: remove e1, e2, multiply every remaining edge into 2r
// length-2 paths, and glue a Heinlein wall of size 2r onto the freed
// endpoints (a*, b* of e1 and c*, d* of e2).
CounterexampleInstance build_z(const Graph& h, const WallDesignation& m, Edge e1, Edge e2, int r,
                               int min_apart = 70);

// Re-checks all instance invariants; throws on violation.
void validate_instance(const CounterexampleInstance& inst);

}  // namespace eposa

#endif
