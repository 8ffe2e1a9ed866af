#ifndef EPOSA_SUBDIVISION_HPP
#define EPOSA_SUBDIVISION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "eposa/budget.hpp"
#include "eposa/graph.hpp"

namespace eposa {

// Witness that H embeds into G as a subdivision: an injective branch map
// and one path per H-edge, internally disjoint and internally avoiding all
// branch images.
struct Embedding {
    std::vector<VertexId> branch;                   // V(H) -> V(G)
    std::vector<std::vector<VertexId>> edge_paths;  // parallel to h.edges(); path from branch[e.u] to branch[e.v]
};

bool validate_embedding(const Graph& h, const Graph& g, const Embedding& emb);

// Exact backtracking search. nullopt means no subdivision of H exists in G;
// budget exhaustion raises ResourceLimitError. Interchangeable midpoint
// copies (Midpoint labels) are canonicalized to the least unused member, so
// parallel families do not blow up the search.
std::optional<Embedding> find_subdivision(const Graph& h, const Graph& g, Budget* budget = nullptr);

// Enumerates every embedding (up to midpoint canonicalization) in
// deterministic order; the callback returns true to stop early.
void enumerate_subdivisions(const Graph& h, const Graph& g, const std::function<bool(const Embedding&)>& callback,
                            Budget* budget = nullptr);

// Expansion factor of a canonical embedding: the number of raw embeddings
// it represents once interchangeable midpoints are distinguished again.
double midpoint_expansion_factor(const Graph& g, const Embedding& emb);

// Graph isomorphism via subdivision search (equal orders force all edge
// paths to length one).
bool is_isomorphic(const Graph& a, const Graph& b, Budget* budget = nullptr);

}  // namespace eposa

#endif
