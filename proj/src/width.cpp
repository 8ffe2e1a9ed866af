#include "eposa/width.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace eposa {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    return adj;
}

}  // namespace

PathDecomposition pathwidth_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    if (n > 25) throw InvalidSizeError("pathwidth_exact supports up to 25 vertices");
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

    // boundary(S) = vertices of S with a neighbor outside S; the DP value
    // f[S] is the best achievable maximum boundary over all orderings that
    // place S first.
    auto boundary_size = [&](std::uint32_t s) {
        int count = 0;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[static_cast<size_t>(v)] & ~s & full) ++count;
        }
        return count;
    };

    std::vector<std::uint8_t> f(static_cast<size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n + 1;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            best = std::min(best, static_cast<int>(f[s & ~(1u << v)]));
        }
        f[s] = static_cast<std::uint8_t>(std::max(best, boundary_size(s)));
    }

    PathDecomposition pd;
    pd.width = f[full];

    // Recover an optimal ordering by walking the DP backwards.
    std::vector<VertexId> reversed;
    std::uint32_t s = full;
    while (s) {
        int pick = -1;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::max(static_cast<int>(f[s & ~(1u << v)]), boundary_size(s)) == f[s]) {
                pick = v;
                break;
            }
        }
        reversed.push_back(pick);
        s &= ~(1u << pick);
    }
    pd.order.assign(reversed.rbegin(), reversed.rend());

    std::uint32_t prefix = 0;
    for (VertexId v : pd.order) {
        std::vector<VertexId> bag;
        std::uint32_t rest = prefix;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[static_cast<size_t>(u)] & ~prefix & full) bag.push_back(u);
        }
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
        prefix |= 1u << v;
    }
    if (!validate_path_decomposition(g, pd)) throw Error("pathwidth certificate failed validation");
    return pd;
}

bool validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    const int n = g.vertex_count();
    if (n == 0) return pd.bags.empty() && pd.width == -1;
    if (static_cast<int>(pd.bags.size()) != n || static_cast<int>(pd.order.size()) != n) return false;

    int max_bag = 0;
    std::vector<int> first(static_cast<size_t>(n), -1), last(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        max_bag = std::max(max_bag, static_cast<int>(pd.bags[static_cast<size_t>(i)].size()));
        for (VertexId v : pd.bags[static_cast<size_t>(i)]) {
            if (!g.has_vertex(v)) return false;
            if (first[static_cast<size_t>(v)] < 0) first[static_cast<size_t>(v)] = i;
            last[static_cast<size_t>(v)] = i;
        }
    }
    if (max_bag - 1 != pd.width) return false;
    // every vertex somewhere, with a contiguous bag interval
    for (VertexId v = 0; v < n; ++v) {
        if (first[static_cast<size_t>(v)] < 0) return false;
        for (int i = first[static_cast<size_t>(v)]; i <= last[static_cast<size_t>(v)]; ++i) {
            const auto& bag = pd.bags[static_cast<size_t>(i)];
            if (!std::binary_search(bag.begin(), bag.end(), v)) return false;
        }
    }
    // every edge inside some bag
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const auto& bag : pd.bags)
            if (std::binary_search(bag.begin(), bag.end(), e.u) && std::binary_search(bag.begin(), bag.end(), e.v)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

TreeDecomposition treewidth_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    if (n > 20) throw InvalidSizeError("treewidth_exact supports up to 20 vertices");
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (1u << n) - 1;

    // Q(S, v): vertices outside S u {v} reachable from v through S; the
    // cost of eliminating v right after the set S.
    auto q_size = [&](std::uint32_t s, int v) {
        std::uint32_t reach = 1u << v;
        std::uint32_t frontier = reach;
        std::uint32_t nbhd = 0;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t rest = frontier;
            while (rest) {
                int x = std::countr_zero(rest);
                rest &= rest - 1;
                nbhd |= adj[static_cast<size_t>(x)];
                next |= adj[static_cast<size_t>(x)] & s;
            }
            frontier = next & ~reach;
            reach |= frontier;
        }
        return std::popcount(nbhd & full & ~s & ~(1u << v));
    };

    std::vector<std::uint8_t> f(static_cast<size_t>(full) + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int best = n + 1;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t prev = s & ~(1u << v);
            best = std::min(best, std::max(static_cast<int>(f[prev]), q_size(prev, v)));
        }
        f[s] = static_cast<std::uint8_t>(best);
    }

    TreeDecomposition td;
    td.width = f[full];

    std::vector<VertexId> reversed;
    std::uint32_t s = full;
    while (s) {
        std::uint32_t rest = s;
        int pick = -1;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t prev = s & ~(1u << v);
            if (std::max(static_cast<int>(f[prev]), q_size(prev, v)) == f[s]) {
                pick = v;
                break;
            }
        }
        reversed.push_back(pick);
        s &= ~(1u << pick);
    }
    td.elimination_order.assign(reversed.rbegin(), reversed.rend());

    // Bags from simulated elimination on the fill graph.
    std::vector<std::set<VertexId>> fill(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) {
        fill[static_cast<size_t>(e.u)].insert(e.v);
        fill[static_cast<size_t>(e.v)].insert(e.u);
    }
    std::vector<int> position(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<size_t>(td.elimination_order[static_cast<size_t>(i)])] = i;
    td.parent.assign(static_cast<size_t>(n), -1);
    int max_bag = 1;
    for (int i = 0; i < n; ++i) {
        VertexId v = td.elimination_order[static_cast<size_t>(i)];
        std::vector<VertexId> bag = {v};
        for (VertexId w : fill[static_cast<size_t>(v)]) bag.push_back(w);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
        max_bag = std::max(max_bag, static_cast<int>(bag.size()));
        // parent: the next-eliminated neighbor; roots fall back to the last bag
        int parent_pos = n;
        for (VertexId w : fill[static_cast<size_t>(v)]) parent_pos = std::min(parent_pos, position[static_cast<size_t>(w)]);
        td.parent[static_cast<size_t>(i)] = parent_pos == n ? (i == n - 1 ? -1 : n - 1) : parent_pos;
        for (VertexId w1 : fill[static_cast<size_t>(v)])
            for (VertexId w2 : fill[static_cast<size_t>(v)])
                if (w1 != w2) fill[static_cast<size_t>(w1)].insert(w2);
        for (VertexId w : fill[static_cast<size_t>(v)]) fill[static_cast<size_t>(w)].erase(v);
        fill[static_cast<size_t>(v)].clear();
    }
    if (max_bag - 1 != td.width) throw Error("treewidth certificate does not match the DP value");
    if (!validate_tree_decomposition(g, td)) throw Error("treewidth certificate failed validation");
    return td;
}

bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int n = g.vertex_count();
    if (n == 0) return td.bags.empty() && td.width == -1;
    if (static_cast<int>(td.bags.size()) != n || static_cast<int>(td.parent.size()) != n) return false;

    int max_bag = 0;
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (const auto& bag : td.bags) {
        max_bag = std::max(max_bag, static_cast<int>(bag.size()));
        for (VertexId v : bag) {
            if (!g.has_vertex(v)) return false;
            covered[static_cast<size_t>(v)] = true;
        }
    }
    if (max_bag - 1 != td.width) return false;
    for (VertexId v = 0; v < n; ++v)
        if (!covered[static_cast<size_t>(v)]) return false;

    for (const Edge& e : g.edges()) {
        bool ok = false;
        for (const auto& bag : td.bags)
            if (std::binary_search(bag.begin(), bag.end(), e.u) && std::binary_search(bag.begin(), bag.end(), e.v)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }

    // Bags containing any vertex must form a connected subtree.
    for (VertexId v = 0; v < n; ++v) {
        std::vector<int> holding;
        for (int i = 0; i < n; ++i)
            if (std::binary_search(td.bags[static_cast<size_t>(i)].begin(), td.bags[static_cast<size_t>(i)].end(), v))
                holding.push_back(i);
        if (holding.empty()) return false;
        std::set<int> in_set(holding.begin(), holding.end());
        // climb from each holding bag towards the root; within the subtree
        // every step up must stay in the set until the subtree root
        int root = *std::min_element(holding.begin(), holding.end(), [&](int x, int y) {
            // the subtree root is the bag whose parent is outside the set
            bool xr = td.parent[static_cast<size_t>(x)] < 0 || !in_set.count(td.parent[static_cast<size_t>(x)]);
            bool yr = td.parent[static_cast<size_t>(y)] < 0 || !in_set.count(td.parent[static_cast<size_t>(y)]);
            return xr > yr;
        });
        for (int i : holding) {
            int cur = i;
            while (cur != root) {
                int p = td.parent[static_cast<size_t>(cur)];
                if (p < 0 || !in_set.count(p)) return false;  // left the subtree before reaching its root
                cur = p;
            }
        }
    }
    return true;
}

}  // namespace eposa
