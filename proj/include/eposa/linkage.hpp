#ifndef EPOSA_LINKAGE_HPP
#define EPOSA_LINKAGE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "eposa/budget.hpp"
#include "eposa/gadgets.hpp"
#include "eposa/graph.hpp"

namespace eposa {

// Vertex-disjoint union of an a*-b* path and a c*-d* path.
struct Linkage {
    std::vector<VertexId> path_ab;
    std::vector<VertexId> path_cd;
};

// Exact search: nullopt means no linkage exists. Backtracks over the a-b
// path with reachability pruning; deterministic (lexicographically least
// witness). banned edges are treated as absent.
std::optional<Linkage> find_linkage(const Graph& g, VertexId a, VertexId b, VertexId c, VertexId d,
                                    const std::vector<Edge>& banned = {}, Budget* budget = nullptr);

bool validate_linkage(const Graph& g, const Linkage& l, VertexId a, VertexId b, VertexId c, VertexId d);

struct TwoLinkagesResult {
    bool exists = false;
    std::optional<std::pair<Linkage, Linkage>> witness;
    std::uint64_t nodes = 0;  // search nodes on certified exhaustion or success
};

// Decides whether the wall admits two edge-disjoint (a*-b*, c*-d*) linkages
// by exhaustive enumeration of the first linkage (canonicalized on the a*
// edge) and an exact search for the second. A false result certifies
// exhaustion; budget overruns raise ResourceLimitError.
TwoLinkagesResult exists_two_edge_disjoint_linkages(const HeinleinWall& w, Budget* budget = nullptr);

struct RobustnessResult {
    bool robust = false;
    std::optional<std::vector<Edge>> witness_u;  // a deletion set killing every linkage
    std::uint64_t cases = 0;
};

// True iff for every edge set U with |U| <= budget_edges the wall minus U
// still has a linkage. Exhaustive over all such U.
RobustnessResult hitting_robustness(const HeinleinWall& w, int budget_edges, Budget* budget = nullptr);

}  // namespace eposa

#endif
