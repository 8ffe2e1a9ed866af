#include "eposa/wall_geom.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>

namespace eposa {

namespace {

void check_path(const Wall& w, const std::vector<VertexId>& path) {
    if (path.empty()) throw NotAPathError("empty vertex sequence");
    std::set<VertexId> seen;
    for (VertexId v : path) {
        if (!w.graph.has_vertex(v)) throw NotAPathError("vertex out of range");
        if (!seen.insert(v).second) throw NotAPathError("repeated vertex in path");
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!w.graph.has_edge(path[i], path[i + 1])) throw NotAPathError("consecutive vertices not adjacent");
}

// State-space search over (vertex, set of rows met, set of columns met) with
// both set sizes capped. A capped walk reaches a target iff a capped simple
// path does (shortcutting a walk only shrinks the sets), so this decides
// exactly whether some u-target path meets <= cap rows and <= cap columns.
class CappedSearch {
  public:
    explicit CappedSearch(const Wall& w) : w_(w) {
        if (w.rows.size() > 20 || w.columns.size() > 20)
            throw InvalidSizeError("apartness search supports walls up to 19 rows/columns");
    }

    // Returns a witness path on success.
    std::optional<std::vector<VertexId>> reach(VertexId u, const std::vector<VertexId>& targets, int cap) {
        if (cap < 1) return std::nullopt;
        std::vector<bool> is_target(static_cast<size_t>(w_.graph.vertex_count()), false);
        for (VertexId t : targets) is_target[static_cast<size_t>(t)] = true;

        std::unordered_map<std::uint64_t, std::uint64_t> parent;  // state -> predecessor state
        std::deque<std::uint64_t> queue;
        const std::uint64_t start = pack(u, row_bit(u), col_bit(u));
        parent.emplace(start, start);
        queue.push_back(start);

        while (!queue.empty()) {
            const std::uint64_t s = queue.front();
            queue.pop_front();
            const auto [v, rows, cols] = unpack(s);
            if (is_target[static_cast<size_t>(v)]) return unwind(parent, s, start);
            for (VertexId nb : w_.graph.neighbors(v)) {
                const std::uint32_t nrows = rows | row_bit(nb);
                const std::uint32_t ncols = cols | col_bit(nb);
                if (std::popcount(nrows) > cap || std::popcount(ncols) > cap) continue;
                const std::uint64_t ns = pack(nb, nrows, ncols);
                if (parent.emplace(ns, s).second) queue.push_back(ns);
            }
        }
        return std::nullopt;
    }

  private:
    std::uint32_t row_bit(VertexId v) const {
        int r = w_.row_of[static_cast<size_t>(v)];
        return r >= 0 ? (1u << r) : 0u;
    }
    std::uint32_t col_bit(VertexId v) const {
        int c = w_.col_of[static_cast<size_t>(v)];
        return c >= 0 ? (1u << c) : 0u;
    }
    static std::uint64_t pack(VertexId v, std::uint32_t rows, std::uint32_t cols) {
        return static_cast<std::uint64_t>(v) | (static_cast<std::uint64_t>(rows) << 14) |
               (static_cast<std::uint64_t>(cols) << 34);
    }
    static std::tuple<VertexId, std::uint32_t, std::uint32_t> unpack(std::uint64_t s) {
        return {static_cast<VertexId>(s & 0x3fff), static_cast<std::uint32_t>((s >> 14) & 0xfffff),
                static_cast<std::uint32_t>((s >> 34) & 0xfffff)};
    }
    std::vector<VertexId> unwind(const std::unordered_map<std::uint64_t, std::uint64_t>& parent, std::uint64_t s,
                                 std::uint64_t start) const {
        std::vector<VertexId> path;
        while (true) {
            path.push_back(static_cast<VertexId>(s & 0x3fff));
            if (s == start) break;
            s = parent.at(s);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    const Wall& w_;
};

int count_met(const Wall& w, const std::vector<VertexId>& path, const std::vector<int>& index) {
    check_path(w, path);
    std::set<int> seen;
    for (VertexId v : path) {
        int i = index[static_cast<size_t>(v)];
        if (i >= 0) seen.insert(i);
    }
    return static_cast<int>(seen.size());
}

}  // namespace

int rows_met(const Wall& w, const std::vector<VertexId>& path) { return count_met(w, path, w.row_of); }
int cols_met(const Wall& w, const std::vector<VertexId>& path) { return count_met(w, path, w.col_of); }

bool is_d_apart(const Wall& w, VertexId u, VertexId v, int d) {
    if (u == v) throw Error("is_d_apart: identical vertices");
    if (d <= 0) return true;
    CappedSearch search(w);
    if (search.reach(u, {v}, d)) return false;
    if (search.reach(u, w.outercycle, d)) return false;
    if (search.reach(v, w.outercycle, d)) return false;
    return true;
}

ApartnessResult apartness(const Wall& w, VertexId u, VertexId v) {
    if (u == v) throw Error("apartness: identical vertices");
    CappedSearch search(w);
    const int limit = static_cast<int>(std::max(w.rows.size(), w.columns.size()));
    for (int cap = 1; cap <= limit; ++cap) {
        for (const auto& [src, targets] :
             {std::pair<VertexId, std::vector<VertexId>>{u, {v}}, {u, w.outercycle}, {v, w.outercycle}}) {
            if (auto path = search.reach(src, targets, cap)) return {cap - 1, *path};
        }
    }
    throw Error("apartness: no path found (disconnected wall?)");
}

bool bricks_apart(const Wall& w, int brick1, int brick2, int d) {
    if (brick1 < 0 || brick2 < 0 || brick1 >= static_cast<int>(w.bricks.size()) ||
        brick2 >= static_cast<int>(w.bricks.size()))
        throw Error("brick index out of range");
    if (brick1 == brick2) throw SameBrickError("bricks_apart: identical bricks");
    if (d <= 0) return true;
    const auto& c1 = w.bricks[static_cast<size_t>(brick1)].cycle;
    const auto& c2 = w.bricks[static_cast<size_t>(brick2)].cycle;
    CappedSearch search(w);
    // A vertex that can reach the outercycle within the cap makes every pair
    // through it fail.
    for (VertexId x : c1)
        if (search.reach(x, w.outercycle, d)) return false;
    for (VertexId y : c2)
        if (search.reach(y, w.outercycle, d)) return false;
    for (VertexId x : c1) {
        for (VertexId y : c2) {
            if (x == y) return false;  // trivial path meets 1 row, d >= 1 fails
            if (search.reach(x, {y}, d)) return false;
        }
    }
    return true;
}

EdgePair select_far_edge_pair(const Wall& w, int d) {
    if (w.kind != WallKind::Prime) throw Error("select_far_edge_pair requires a wall'");
    const Graph& g = w.graph;
    CappedSearch search(w);

    // Endpoints that reach the outercycle within the cap can never be part
    // of a d-apart pair.
    std::vector<bool> ok(static_cast<size_t>(g.vertex_count()), true);
    if (d >= 1)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            ok[static_cast<size_t>(v)] = !search.reach(v, w.outercycle, d);

    auto far = [&](VertexId x, VertexId y) {
        if (x == y) return false;
        if (!ok[static_cast<size_t>(x)] || !ok[static_cast<size_t>(y)]) return false;
        return d < 1 || !search.reach(x, {y}, d);
    };

    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        if (g.degree(a) != 3) continue;
        for (VertexId c = 0; c < g.vertex_count(); ++c) {
            if (c == a || g.degree(c) != 3) continue;
            for (VertexId b : g.neighbors(a)) {
                if (b == c) continue;
                for (VertexId dd : g.neighbors(c)) {
                    if (dd == a || dd == b) continue;
                    if (Edge(a, b) == Edge(c, dd)) continue;
                    if (far(a, c) && far(a, dd) && far(b, c) && far(b, dd))
                        return {a, b, c, dd};
                }
            }
        }
    }
    throw NoSuchPairError("no d-apart edge pair for d = " + std::to_string(d));
}

}  // namespace eposa
