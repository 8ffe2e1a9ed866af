#ifndef EPOSA_WIDTH_HPP
#define EPOSA_WIDTH_HPP

#include <vector>

#include "eposa/budget.hpp"
#include "eposa/graph.hpp"

namespace eposa {

struct PathDecomposition {
    int width = -1;
    std::vector<VertexId> order;             // optimal vertex placement order
    std::vector<std::vector<VertexId>> bags; // one bag per position
};

// Exact pathwidth by the vertex-ordering subset DP (pathwidth = vertex
// separation number). Supported up to 25 vertices.
PathDecomposition pathwidth_exact(const Graph& g);
bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd);

struct TreeDecomposition {
    int width = -1;
    std::vector<VertexId> elimination_order;
    std::vector<std::vector<VertexId>> bags;  // one per vertex, indexed by elimination position
    std::vector<int> parent;                  // parent bag index, -1 for the root
};

// Exact treewidth by the elimination-ordering subset DP. Supported up to 20
// vertices.
TreeDecomposition treewidth_exact(const Graph& g);
bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

}  // namespace eposa

#endif
