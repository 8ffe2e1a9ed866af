#ifndef EPOSA_WALL_GEOM_HPP
#define EPOSA_WALL_GEOM_HPP

#include <utility>
#include <vector>

#include "eposa/gadgets.hpp"

namespace eposa {

// Number of distinct rows (columns) of the wall met by a path, given as a
// vertex sequence that must form a path in w.graph.
int rows_met(const Wall& w, const std::vector<VertexId>& path);
int cols_met(const Wall& w, const std::vector<VertexId>& path);

// u,v are d-apart if every u-v path, every u-C path and every v-C path
// (C = outercycle, trivial paths included) meets at least d+1 rows or at
// least d+1 columns.
bool is_d_apart(const Wall& w, VertexId u, VertexId v, int d);

struct ApartnessResult {
    int value = 0;                       // max d such that u,v are d-apart
    std::vector<VertexId> witness_path;  // a path meeting only value+1 rows and columns
};

ApartnessResult apartness(const Wall& w, VertexId u, VertexId v);

// Bricks are d-apart if every cross pair of their vertices is. Shared
// vertices make a pair fail every d >= 1.
bool bricks_apart(const Wall& w, int brick1, int brick2, int d);

struct EdgePair {
    // Oriented: a and c are the proper branch vertex ends.
    VertexId a = -1, b = -1, c = -1, d = -1;
};

// Lexicographically first pair of disjoint edges of a wall', each incident
// with a degree-3 branch vertex, with all four endpoint cross-pairs d-apart.
EdgePair select_far_edge_pair(const Wall& w, int d);

}  // namespace eposa

#endif
