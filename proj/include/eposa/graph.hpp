#ifndef EPOSA_GRAPH_HPP
#define EPOSA_GRAPH_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eposa/errors.hpp"

namespace eposa {

using VertexId = int;

// Unordered vertex pair, normalized so u < v.
struct Edge {
    VertexId u = -1;
    VertexId v = -1;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw LoopEdgeError("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class RoleKind {
    Plain,
    TerminalA,
    TerminalB,
    TerminalC,
    TerminalD,
    Bottleneck,   // index j
    WallBranch,   // (row, col) in the generating elementary wall
    PathVertex,   // u^j_i: (path j, position i)
    Midpoint,     // copy of a multiplied edge: (orig u, orig v, copy index)
};

struct RoleLabel {
    RoleKind kind = RoleKind::Plain;
    int a = -1, b = -1, c = -1;

    static RoleLabel plain() { return {}; }
    static RoleLabel terminal(char which) {
        RoleLabel l;
        switch (which) {
            case 'a': l.kind = RoleKind::TerminalA; break;
            case 'b': l.kind = RoleKind::TerminalB; break;
            case 'c': l.kind = RoleKind::TerminalC; break;
            case 'd': l.kind = RoleKind::TerminalD; break;
            default: throw Error("bad terminal tag");
        }
        return l;
    }
    static RoleLabel bottleneck(int j) { return {RoleKind::Bottleneck, j}; }
    static RoleLabel wall_branch(int row, int col) { return {RoleKind::WallBranch, row, col}; }
    static RoleLabel path_vertex(int j, int i) { return {RoleKind::PathVertex, j, i}; }
    static RoleLabel midpoint(VertexId u, VertexId v, int copy) {
        return {RoleKind::Midpoint, u < v ? u : v, u < v ? v : u, copy};
    }

    // Display string used by DOT export: "a*", "z3", "u[2,5]", "w[1,2]", "m[0-4:1]".
    std::string display() const;

    friend bool operator==(const RoleLabel&, const RoleLabel&) = default;
};

// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
// build; no loops, no parallel edges.
class Graph {
  public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(VertexId u, VertexId v) const;
    bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

    const RoleLabel& label(VertexId v) const {
        check_vertex(v);
        return labels_[static_cast<size_t>(v)];
    }
    const std::vector<RoleLabel>& labels() const { return labels_; }

    int max_degree() const;
    bool is_subcubic() const { return max_degree() <= 3; }

  private:
    void check_vertex(VertexId v) const {
        if (!has_vertex(v)) throw Error("vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;                  // sorted, unique
    std::vector<std::vector<VertexId>> adj_;   // sorted neighbor lists
    std::vector<RoleLabel> labels_;

    friend class GraphBuilder;
};

class GraphBuilder {
  public:
    GraphBuilder() = default;
    explicit GraphBuilder(int n) { ensure_vertex(n - 1); }

    VertexId add_vertex(RoleLabel label = {}) {
        labels_.push_back(label);
        return static_cast<VertexId>(labels_.size()) - 1;
    }
    // Grows the vertex set so that v is valid.
    void ensure_vertex(VertexId v) {
        while (static_cast<VertexId>(labels_.size()) <= v) labels_.push_back(RoleLabel{});
    }
    void add_edge(VertexId u, VertexId v) {
        if (u == v) throw LoopEdgeError("loop edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (u < 0 || v < 0) throw Error("negative vertex id");
        ensure_vertex(u > v ? u : v);
        edges_.emplace_back(u, v);
    }
    void set_label(VertexId v, RoleLabel label) {
        ensure_vertex(v);
        labels_[static_cast<size_t>(v)] = label;
    }
    int vertex_count() const { return static_cast<int>(labels_.size()); }

    // Finalizes: sorts and deduplicates the edge set.
    Graph build();

  private:
    std::vector<Edge> edges_;
    std::vector<RoleLabel> labels_;
};

// Builds a graph from an edge list; vertex count is max endpoint + 1.
// Duplicate pairs collapse; loops are rejected.
Graph build_graph(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                  const std::map<VertexId, RoleLabel>& labels = {});

// Same vertex set, edge set minus `removed`. Unknown members are an error.
Graph delete_edges(const Graph& g, const std::vector<Edge>& removed);

struct SuppressResult {
    Graph graph;
    // old vertex id -> new id, or -1 for contracted-away vertices
    std::vector<VertexId> old_to_new;
};

// Repeatedly contracts unprotected degree-2 vertices (smallest id first).
// A contraction that would create a loop or a parallel edge is rejected.
SuppressResult suppress_degree_two_tracked(const Graph& g, const std::vector<VertexId>& protected_vertices = {});
Graph suppress_degree_two(const Graph& g, const std::vector<VertexId>& protected_vertices = {});

// Subgraph induced by `keep` (renumbered in ascending id order); the second
// member maps old ids to new ids (-1 if dropped).
std::pair<Graph, std::vector<VertexId>> induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);

int component_count(const Graph& g);
bool is_connected(const Graph& g);
int cycle_rank(const Graph& g);  // |E| - |V| + components

bool graphs_equal(const Graph& a, const Graph& b);  // same n, same edge set

// All vertices of degree d.
std::vector<VertexId> vertices_of_degree(const Graph& g, int d);

}  // namespace eposa

#endif
