#ifndef EPOSA_MENGER_HPP
#define EPOSA_MENGER_HPP

#include <array>
#include <optional>
#include <vector>

#include "eposa/graph.hpp"

namespace eposa {

struct Separator {
    std::vector<VertexId> vertices;  // X; never contains a
    std::vector<VertexId> side_a;    // component of a in G - X
    std::vector<VertexId> side_b;    // the rest
};

// Smallest X (a not in X; targets may be cut) such that G - X has no
// a-targets path, if its size is within bound; nullopt when the
// a-to-targets connectivity exceeds bound.
std::optional<Separator> min_vertex_separator(const Graph& g, VertexId a, const std::vector<VertexId>& targets,
                                              int bound);

// Maximum number of a-targets paths pairwise disjoint except at a
// (interiors avoid the target set). Equals the minimum separator size.
int max_fan_size(const Graph& g, VertexId a, const std::vector<VertexId>& targets);

struct Fan {
    VertexId center = -1;
    std::array<std::vector<VertexId>, 3> legs;  // center included as first vertex
};

// Three non-trivial paths from v into s, disjoint except at v, interiors
// avoiding s; exact via unit-vertex-capacity flow.
std::optional<Fan> three_fan(const Graph& g, VertexId v, const std::vector<VertexId>& s);

bool validate_fan(const Graph& g, const Fan& f, const std::vector<VertexId>& s);

// Vertices sending a 3-fan to branch_set; members of branch_set themselves
// qualify via a 3-fan to the remaining branch vertices.
std::vector<VertexId> compute_b_m(const Graph& g, const std::vector<VertexId>& branch_set);

}  // namespace eposa

#endif
