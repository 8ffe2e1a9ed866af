#include "eposa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eposa {

std::string RoleLabel::display() const {
    switch (kind) {
        case RoleKind::Plain: return "";
        case RoleKind::TerminalA: return "a*";
        case RoleKind::TerminalB: return "b*";
        case RoleKind::TerminalC: return "c*";
        case RoleKind::TerminalD: return "d*";
        case RoleKind::Bottleneck: return "z" + std::to_string(a);
        case RoleKind::WallBranch: return "w[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case RoleKind::PathVertex: return "u[" + std::to_string(a) + "," + std::to_string(b) + "]";
        case RoleKind::Midpoint:
            return "m[" + std::to_string(a) + "-" + std::to_string(b) + ":" + std::to_string(c) + "]";
    }
    return "";
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u == v || !has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

Graph GraphBuilder::build() {
    Graph g;
    g.n_ = static_cast<int>(labels_.size());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    g.edges_ = std::move(edges_);
    g.labels_ = std::move(labels_);
    g.adj_.assign(static_cast<size_t>(g.n_), {});
    for (const Edge& e : g.edges_) {
        g.adj_[static_cast<size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    edges_.clear();
    labels_.clear();
    return g;
}

Graph build_graph(const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                  const std::map<VertexId, RoleLabel>& labels) {
    GraphBuilder b;
    for (const auto& [u, v] : edge_list) b.add_edge(u, v);
    for (const auto& [v, l] : labels) b.set_label(v, l);
    return b.build();
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& removed) {
    std::set<Edge> gone;
    for (const Edge& e : removed) {
        if (!g.has_edge(e.u, e.v))
            throw UnknownEdgeError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
        gone.insert(e);
    }
    GraphBuilder b;
    b.ensure_vertex(g.vertex_count() - 1);
    for (const Edge& e : g.edges())
        if (!gone.count(e)) b.add_edge(e.u, e.v);
    for (VertexId v = 0; v < g.vertex_count(); ++v) b.set_label(v, g.label(v));
    return b.build();
}

SuppressResult suppress_degree_two_tracked(const Graph& g, const std::vector<VertexId>& protected_vertices) {
    const int n = g.vertex_count();
    std::vector<bool> prot(static_cast<size_t>(n), false);
    for (VertexId v : protected_vertices) {
        if (v < 0 || v >= n) throw Error("protected vertex out of range");
        prot[static_cast<size_t>(v)] = true;
    }

    // Mutable adjacency as sets; vertices are marked dead when contracted.
    std::vector<std::set<VertexId>> adj(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.u)].insert(e.v);
        adj[static_cast<size_t>(e.v)].insert(e.u);
    }
    std::vector<bool> dead(static_cast<size_t>(n), false);

    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < n; ++v) {
            if (dead[v] || prot[v] || adj[v].size() != 2) continue;
            auto it = adj[v].begin();
            VertexId x = *it++;
            VertexId y = *it;
            if (x == y) throw DegenerateContractionError("contraction at " + std::to_string(v) + " would create a loop");
            if (adj[static_cast<size_t>(x)].count(y))
                throw DegenerateContractionError("contraction at " + std::to_string(v) +
                                                 " would create a parallel edge {" + std::to_string(x) + "," +
                                                 std::to_string(y) + "}");
            adj[static_cast<size_t>(x)].erase(v);
            adj[static_cast<size_t>(y)].erase(v);
            adj[static_cast<size_t>(x)].insert(y);
            adj[static_cast<size_t>(y)].insert(x);
            adj[v].clear();
            dead[v] = true;
            changed = true;
        }
    }

    SuppressResult res;
    res.old_to_new.assign(static_cast<size_t>(n), -1);
    GraphBuilder b;
    for (VertexId v = 0; v < n; ++v) {
        if (!dead[v]) res.old_to_new[static_cast<size_t>(v)] = b.add_vertex(g.label(v));
    }
    for (VertexId v = 0; v < n; ++v) {
        if (dead[v]) continue;
        for (VertexId w : adj[static_cast<size_t>(v)])
            if (v < w) b.add_edge(res.old_to_new[static_cast<size_t>(v)], res.old_to_new[static_cast<size_t>(w)]);
    }
    res.graph = b.build();
    return res;
}

Graph suppress_degree_two(const Graph& g, const std::vector<VertexId>& protected_vertices) {
    return suppress_degree_two_tracked(g, protected_vertices).graph;
}

std::pair<Graph, std::vector<VertexId>> induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    std::vector<VertexId> old_to_new(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    GraphBuilder b;
    for (VertexId v : sorted) {
        if (!g.has_vertex(v)) throw Error("induced_subgraph: vertex out of range");
        old_to_new[static_cast<size_t>(v)] = b.add_vertex(g.label(v));
    }
    for (const Edge& e : g.edges()) {
        VertexId u = old_to_new[static_cast<size_t>(e.u)];
        VertexId v = old_to_new[static_cast<size_t>(e.v)];
        if (u >= 0 && v >= 0) b.add_edge(u, v);
    }
    return {b.build(), std::move(old_to_new)};
}

int component_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int comps = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

bool is_connected(const Graph& g) { return g.vertex_count() <= 1 || component_count(g) == 1; }

int cycle_rank(const Graph& g) { return g.edge_count() - g.vertex_count() + component_count(g); }

bool graphs_equal(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

std::vector<VertexId> vertices_of_degree(const Graph& g, int d) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == d) out.push_back(v);
    return out;
}

}  // namespace eposa
