#include "eposa/linkage.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

namespace eposa {

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("EPOSA_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 4'000'000'000ULL;
}

namespace {

// Bitmask engine for graphs with at most 64 vertices and 128 edges; all the
// wall-sized searches live here.
struct MaskCore {
    using EdgeMask = unsigned __int128;

    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::vector<std::pair<VertexId, int>>> inc;  // (neighbor, edge index), ascending
    std::vector<Edge> edges;

    explicit MaskCore(const Graph& g) {
        n = g.vertex_count();
        if (n > 64 || g.edge_count() > 128)
            throw InvalidSizeError("mask search supports up to 64 vertices / 128 edges");
        adj.assign(static_cast<size_t>(n), 0);
        inc.assign(static_cast<size_t>(n), {});
        edges = g.edges();
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            const Edge& e = edges[static_cast<size_t>(i)];
            adj[static_cast<size_t>(e.u)] |= 1ULL << e.v;
            adj[static_cast<size_t>(e.v)] |= 1ULL << e.u;
            inc[static_cast<size_t>(e.u)].emplace_back(e.v, i);
            inc[static_cast<size_t>(e.v)].emplace_back(e.u, i);
        }
        for (auto& lst : inc) std::sort(lst.begin(), lst.end());
    }

    int edge_index(VertexId u, VertexId v) const {
        for (const auto& [nb, idx] : inc[static_cast<size_t>(u)])
            if (nb == v) return idx;
        throw Error("edge_index: not an edge");
    }

    // Vertices reachable from `from` inside `allowed`, ignoring banned edges.
    std::uint64_t reach(std::uint64_t from, std::uint64_t allowed, EdgeMask banned) const {
        std::uint64_t r = from & allowed;
        std::uint64_t frontier = r;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                if (banned == 0) {
                    next |= adj[static_cast<size_t>(v)] & allowed;
                } else {
                    for (const auto& [nb, idx] : inc[static_cast<size_t>(v)])
                        if (!((banned >> idx) & 1) && ((allowed >> nb) & 1)) next |= 1ULL << nb;
                }
            }
            frontier = next & ~r;
            r |= frontier;
        }
        return r;
    }

    bool connected(VertexId s, VertexId t, std::uint64_t allowed, EdgeMask banned) const {
        if (!((allowed >> s) & 1) || !((allowed >> t) & 1)) return false;
        return (reach(1ULL << s, allowed, banned) >> t) & 1;
    }
};

struct PathState {
    std::vector<VertexId> stack;
    std::uint64_t visited = 0;
    MaskCore::EdgeMask edges_used = 0;
};

// DFS over simple s->t paths within `allowed`, ascending neighbor order.
// on_complete returns true to stop the whole enumeration. `viable` is an
// extra monotone prune evaluated before each extension.
template <typename OnComplete, typename Viable>
bool enum_paths(const MaskCore& core, VertexId cur, VertexId t, std::uint64_t allowed, MaskCore::EdgeMask banned,
                PathState& st, Budget& budget, int min_first_edge, OnComplete&& on_complete, Viable&& viable) {
    if (cur == t) return on_complete(st);
    for (const auto& [nb, idx] : core.inc[static_cast<size_t>(cur)]) {
        if (!((allowed >> nb) & 1) || ((st.visited >> nb) & 1)) continue;
        if ((banned >> idx) & 1) continue;
        if (st.stack.size() == 1 && idx <= min_first_edge) continue;
        budget.tick();
        st.stack.push_back(nb);
        st.visited |= 1ULL << nb;
        st.edges_used |= static_cast<MaskCore::EdgeMask>(1) << idx;
        bool stop = false;
        // Reach pruning: t must stay reachable without revisiting.
        std::uint64_t usable = allowed & ~(st.visited & ~(1ULL << nb));
        if (core.connected(nb, t, usable, banned) && viable(st))
            stop = enum_paths(core, nb, t, allowed, banned, st, budget, min_first_edge, on_complete, viable);
        st.stack.pop_back();
        st.visited &= ~(1ULL << nb);
        st.edges_used &= ~(static_cast<MaskCore::EdgeMask>(1) << idx);
        if (stop) return true;
    }
    return false;
}

// Lexicographically least s->t path within allowed / banned, or nullopt.
std::optional<std::vector<VertexId>> first_path(const MaskCore& core, VertexId s, VertexId t, std::uint64_t allowed,
                                                MaskCore::EdgeMask banned, Budget& budget) {
    if (!((allowed >> s) & 1) || !((allowed >> t) & 1)) return std::nullopt;
    PathState st;
    st.stack = {s};
    st.visited = 1ULL << s;
    std::optional<std::vector<VertexId>> out;
    enum_paths(
        core, s, t, allowed, banned, st, budget, -1,
        [&](PathState& done) {
            out = done.stack;
            return true;
        },
        [](const PathState&) { return true; });
    return out;
}

// One linkage (ab-path + disjoint cd-path), all edges outside `banned`, with
// the first edge of the ab-path constrained to index > min_first_edge.
std::optional<Linkage> masked_linkage(const MaskCore& core, VertexId a, VertexId b, VertexId c, VertexId d,
                                      MaskCore::EdgeMask banned, int min_first_edge, Budget& budget) {
    const std::uint64_t all = core.n == 64 ? ~0ULL : (1ULL << core.n) - 1;
    const std::uint64_t no_cd = all & ~(1ULL << c) & ~(1ULL << d);
    if (!core.connected(a, b, no_cd, banned)) return std::nullopt;
    PathState st;
    st.stack = {a};
    st.visited = 1ULL << a;
    std::optional<Linkage> out;
    enum_paths(
        core, a, b, no_cd, banned, st, budget, min_first_edge,
        [&](PathState& done) {
            auto cd = first_path(core, c, d, all & ~done.visited, banned, budget);
            if (!cd) return false;
            out = Linkage{done.stack, *cd};
            return true;
        },
        [&](const PathState& partial) {
            // The cd-path must survive whatever the ab-path occupies.
            return core.connected(c, d, all & ~partial.visited, banned);
        });
    return out;
}

MaskCore::EdgeMask edge_mask_of(const MaskCore& core, const std::vector<Edge>& list) {
    MaskCore::EdgeMask m = 0;
    for (const Edge& e : list) m |= static_cast<MaskCore::EdgeMask>(1) << core.edge_index(e.u, e.v);
    return m;
}

// Generic (no vertex-count cap) fallback used by find_linkage on arbitrary
// hosts: plain DFS with BFS reachability pruning.
class GenericLinkageSearch {
  public:
    GenericLinkageSearch(const Graph& g, const std::vector<Edge>& banned, Budget& budget)
        : g_(g), budget_(budget) {
        banned_.insert(banned.begin(), banned.end());
    }

    std::optional<Linkage> run(VertexId a, VertexId b, VertexId c, VertexId d) {
        a_ = a;
        b_ = b;
        c_ = c;
        d_ = d;
        visited_.assign(static_cast<size_t>(g_.vertex_count()), false);
        visited_[static_cast<size_t>(c)] = visited_[static_cast<size_t>(d)] = true;  // ab-path avoids c, d
        visited_[static_cast<size_t>(a)] = true;
        path_ = {a};
        std::optional<Linkage> out;
        dfs(a, out);
        return out;
    }

  private:
    bool edge_ok(VertexId u, VertexId v) const { return !banned_.count(Edge(u, v)); }

    bool reachable(VertexId s, VertexId t, const std::vector<bool>& blocked) const {
        if (blocked[static_cast<size_t>(s)] || blocked[static_cast<size_t>(t)]) return false;
        if (s == t) return true;
        std::vector<bool> seen(static_cast<size_t>(g_.vertex_count()), false);
        std::vector<VertexId> stack = {s};
        seen[static_cast<size_t>(s)] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g_.neighbors(v)) {
                if (seen[static_cast<size_t>(w)] || blocked[static_cast<size_t>(w)] || !edge_ok(v, w)) continue;
                if (w == t) return true;
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        return false;
    }

    std::optional<std::vector<VertexId>> bfs_path(VertexId s, VertexId t, const std::vector<bool>& blocked) const {
        if (blocked[static_cast<size_t>(s)] || blocked[static_cast<size_t>(t)]) return std::nullopt;
        std::vector<VertexId> parent(static_cast<size_t>(g_.vertex_count()), -2);
        std::vector<VertexId> queue = {s};
        parent[static_cast<size_t>(s)] = -1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            VertexId v = queue[qi];
            for (VertexId w : g_.neighbors(v)) {
                if (parent[static_cast<size_t>(w)] != -2 || blocked[static_cast<size_t>(w)] || !edge_ok(v, w))
                    continue;
                parent[static_cast<size_t>(w)] = v;
                if (w == t) {
                    std::vector<VertexId> path;
                    for (VertexId x = t; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push_back(w);
            }
        }
        return std::nullopt;
    }

    bool dfs(VertexId cur, std::optional<Linkage>& out) {
        budget_.tick();
        if (cur == b_) {
            std::vector<bool> blocked = visited_;
            blocked[static_cast<size_t>(c_)] = blocked[static_cast<size_t>(d_)] = false;
            if (auto cd = bfs_path(c_, d_, blocked)) {
                out = Linkage{path_, *cd};
                return true;
            }
            return false;
        }
        for (VertexId w : g_.neighbors(cur)) {
            if (visited_[static_cast<size_t>(w)] || !edge_ok(cur, w)) continue;
            visited_[static_cast<size_t>(w)] = true;
            path_.push_back(w);
            bool viable;
            {
                // b reachable from w; c,d still linkable around the path.
                std::vector<bool> blocked = visited_;
                blocked[static_cast<size_t>(w)] = false;
                viable = reachable(w, b_, blocked);
                if (viable) {
                    blocked = visited_;
                    blocked[static_cast<size_t>(c_)] = blocked[static_cast<size_t>(d_)] = false;
                    viable = reachable(c_, d_, blocked);
                }
            }
            if (viable && dfs(w, out)) return true;
            path_.pop_back();
            visited_[static_cast<size_t>(w)] = false;
        }
        return false;
    }

    const Graph& g_;
    Budget& budget_;
    std::set<Edge> banned_;
    VertexId a_ = -1, b_ = -1, c_ = -1, d_ = -1;
    std::vector<bool> visited_;
    std::vector<VertexId> path_;
};

void check_terminals(const Graph& g, VertexId a, VertexId b, VertexId c, VertexId d) {
    std::set<VertexId> s{a, b, c, d};
    if (s.size() != 4) throw Error("linkage terminals must be distinct");
    for (VertexId v : s)
        if (!g.has_vertex(v)) throw Error("linkage terminal out of range");
}

}  // namespace

std::optional<Linkage> find_linkage(const Graph& g, VertexId a, VertexId b, VertexId c, VertexId d,
                                    const std::vector<Edge>& banned, Budget* budget) {
    check_terminals(g, a, b, c, d);
    Budget local(default_node_budget());
    Budget& bd = budget ? *budget : local;
    if (g.vertex_count() <= 64 && g.edge_count() <= 128) {
        MaskCore core(g);
        return masked_linkage(core, a, b, c, d, edge_mask_of(core, banned), -1, bd);
    }
    GenericLinkageSearch search(g, banned, bd);
    return search.run(a, b, c, d);
}

bool validate_linkage(const Graph& g, const Linkage& l, VertexId a, VertexId b, VertexId c, VertexId d) {
    auto is_path = [&](const std::vector<VertexId>& p, VertexId s, VertexId t) {
        if (p.empty() || p.front() != s || p.back() != t) return false;
        std::set<VertexId> seen;
        for (VertexId v : p)
            if (!seen.insert(v).second) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        return true;
    };
    if (!is_path(l.path_ab, a, b) || !is_path(l.path_cd, c, d)) return false;
    std::set<VertexId> ab(l.path_ab.begin(), l.path_ab.end());
    for (VertexId v : l.path_cd)
        if (ab.count(v)) return false;
    return true;
}

TwoLinkagesResult exists_two_edge_disjoint_linkages(const HeinleinWall& w, Budget* budget) {
    Budget local(default_node_budget());
    Budget& bd = budget ? *budget : local;
    const Graph& g = w.graph;
    MaskCore core(g);
    const VertexId a = w.a, b = w.b, c = w.c(), d = w.d();
    const std::uint64_t all = core.n == 64 ? ~0ULL : (1ULL << core.n) - 1;
    const std::uint64_t no_cd = all & ~(1ULL << c) & ~(1ULL << d);

    TwoLinkagesResult res;
    PathState st;
    st.stack = {a};
    st.visited = 1ULL << a;

    // First linkage canonicalized: its ab-path uses the smaller a*-edge.
    enum_paths(
        core, a, b, no_cd, 0, st, bd, -1,
        [&](PathState& p1) {
            const int f1 = core.edge_index(p1.stack[0], p1.stack[1]);
            const MaskCore::EdgeMask e1 = p1.edges_used;
            if (!masked_linkage(core, a, b, c, d, e1, f1, bd)) return false;  // no L2 for any C1
            PathState cs;
            cs.stack = {c};
            cs.visited = p1.visited | (1ULL << c);
            return enum_paths(
                core, c, d, all & ~p1.visited, 0, cs, bd, -1,
                [&](PathState& c1) {
                    auto l2 = masked_linkage(core, a, b, c, d, e1 | c1.edges_used, f1, bd);
                    if (!l2) return false;
                    std::vector<VertexId> cd_path(c1.stack.begin(), c1.stack.end());
                    res.exists = true;
                    res.witness = std::make_pair(Linkage{p1.stack, cd_path}, *l2);
                    return true;
                },
                [](const PathState&) { return true; });
        },
        [&](const PathState& partial) {
            // L1 needs a cd-path disjoint from its ab-path.
            return core.connected(c, d, all & ~partial.visited, 0);
        });

    res.nodes = bd.used;
    return res;
}

RobustnessResult hitting_robustness(const HeinleinWall& w, int budget_edges, Budget* budget) {
    if (budget_edges < 0) throw InvalidSizeError("edge budget must be >= 0");
    Budget local(default_node_budget());
    Budget& bd = budget ? *budget : local;
    const std::vector<Edge>& edges = w.graph.edges();
    RobustnessResult res;

    // All subsets of size <= budget_edges, in lexicographic order; stop at
    // the first U that kills every linkage.
    std::vector<Edge> u;
    auto rec = [&](auto&& self, int start) -> bool {
        ++res.cases;
        if (!find_linkage(w.graph, w.a, w.b, w.c(), w.d(), u, &bd)) {
            res.witness_u = u;
            return false;
        }
        if (static_cast<int>(u.size()) == budget_edges) return true;
        for (int i = start; i < static_cast<int>(edges.size()); ++i) {
            u.push_back(edges[static_cast<size_t>(i)]);
            bool ok = self(self, i + 1);
            u.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    res.robust = rec(rec, 0);
    return res;
}

}  // namespace eposa
