#include "eposa/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eposa {

namespace {

class SubdivisionSearch {
  public:
    SubdivisionSearch(const Graph& h, const Graph& g, Budget& budget,
                      const std::function<bool(const Embedding&)>& callback, bool stop_at_first)
        : h_(h), g_(g), budget_(budget), callback_(callback), stop_at_first_(stop_at_first) {
        build_families();
        build_order();
        used_.assign(static_cast<size_t>(g_.vertex_count()), false);
        branch_.assign(static_cast<size_t>(h_.vertex_count()), -1);
        paths_.assign(h_.edges().size(), {});
        free_count_ = g_.vertex_count();

        // Degree-aware room bookkeeping: free G vertices of degree >= d must
        // always cover the unplaced H vertices needing degree >= d.
        max_need_ = 0;
        for (VertexId v = 0; v < h_.vertex_count(); ++v) max_need_ = std::max(max_need_, h_.degree(v));
        free_ge_.assign(static_cast<size_t>(max_need_) + 1, 0);
        need_ge_.assign(static_cast<size_t>(max_need_) + 1, 0);
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            for (int d = 1; d <= std::min(g_.degree(v), max_need_); ++d) ++free_ge_[static_cast<size_t>(d)];
        for (VertexId v = 0; v < h_.vertex_count(); ++v)
            for (int d = 1; d <= h_.degree(v); ++d) ++need_ge_[static_cast<size_t>(d)];
    }

    void run() {
        if (h_.vertex_count() > g_.vertex_count() || h_.edge_count() > g_.edge_count()) return;
        place(0);
    }

    std::optional<Embedding> found;

  private:
    // Interchangeable midpoint copies form families keyed by their original
    // edge AND their current neighborhood (an edge deletion breaks the twin
    // symmetry, so label-only grouping would prune valid embeddings); only
    // the least unused member of a family may be occupied.
    void build_families() {
        family_of_.assign(static_cast<size_t>(g_.vertex_count()), -1);
        std::map<std::tuple<int, int, std::vector<VertexId>>, int> key_to_family;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            const RoleLabel& l = g_.label(v);
            if (l.kind != RoleKind::Midpoint) continue;
            std::vector<VertexId> nb(g_.neighbors(v).begin(), g_.neighbors(v).end());
            auto key = std::make_tuple(l.a, l.b, std::move(nb));
            auto [it, fresh] = key_to_family.emplace(std::move(key), static_cast<int>(families_.size()));
            if (fresh) families_.push_back({});
            family_of_[static_cast<size_t>(v)] = it->second;
            families_[static_cast<size_t>(it->second)].push_back(v);  // ascending since v ascends
        }
    }

    // Placement order: highest degree first, then greedily maximize the
    // number of already-placed neighbors so edges get routed early.
    void build_order() {
        const int hn = h_.vertex_count();
        std::vector<bool> picked(static_cast<size_t>(hn), false);
        for (int k = 0; k < hn; ++k) {
            int best = -1, best_placed = -1, best_deg = -1;
            for (VertexId v = 0; v < hn; ++v) {
                if (picked[static_cast<size_t>(v)]) continue;
                int placed_nb = 0;
                for (VertexId w : h_.neighbors(v))
                    if (picked[static_cast<size_t>(w)]) ++placed_nb;
                int deg = h_.degree(v);
                if (placed_nb > best_placed || (placed_nb == best_placed && deg > best_deg)) {
                    best = v;
                    best_placed = placed_nb;
                    best_deg = deg;
                }
            }
            picked[static_cast<size_t>(best)] = true;
            order_.push_back(best);
            std::vector<int> edges_here;
            for (int ei = 0; ei < static_cast<int>(h_.edges().size()); ++ei) {
                const Edge& e = h_.edges()[static_cast<size_t>(ei)];
                if (e.u != best && e.v != best) continue;
                VertexId other = e.u == best ? e.v : e.u;
                if (picked[static_cast<size_t>(other)]) edges_here.push_back(ei);
            }
            edges_at_.push_back(std::move(edges_here));
        }
    }

    bool canonical(VertexId v) const {
        int f = family_of_[static_cast<size_t>(v)];
        if (f < 0) return true;
        for (VertexId m : families_[static_cast<size_t>(f)]) {
            if (m == v) return true;
            if (!used_[static_cast<size_t>(m)]) return false;  // a smaller unused twin exists
        }
        return true;
    }

    void occupy(VertexId v) {
        used_[static_cast<size_t>(v)] = true;
        --free_count_;
        for (int d = 1; d <= std::min(g_.degree(v), max_need_); ++d) --free_ge_[static_cast<size_t>(d)];
    }
    void release(VertexId v) {
        used_[static_cast<size_t>(v)] = false;
        ++free_count_;
        for (int d = 1; d <= std::min(g_.degree(v), max_need_); ++d) ++free_ge_[static_cast<size_t>(d)];
    }

    bool room_left(int unplaced_total) const {
        if (free_count_ < unplaced_total) return false;
        for (int d = 1; d <= max_need_; ++d)
            if (free_ge_[static_cast<size_t>(d)] < need_ge_[static_cast<size_t>(d)]) return false;
        return true;
    }

    bool target_reachable(VertexId from, VertexId target) const {
        if (from == target) return true;
        std::vector<bool> seen(static_cast<size_t>(g_.vertex_count()), false);
        std::vector<VertexId> stack = {from};
        seen[static_cast<size_t>(from)] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g_.neighbors(v)) {
                if (w == target) return true;
                if (seen[static_cast<size_t>(w)] || used_[static_cast<size_t>(w)]) continue;
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        return false;
    }

    // true = stop the whole search
    bool place(int k) {
        if (stop_requested_) return true;
        if (k == h_.vertex_count()) return emit();
        const VertexId hv = order_[static_cast<size_t>(k)];
        const int need_deg = h_.degree(hv);
        for (int d = 1; d <= need_deg; ++d) --need_ge_[static_cast<size_t>(d)];
        bool stop = false;
        for (VertexId cand = 0; cand < g_.vertex_count() && !stop; ++cand) {
            if (used_[static_cast<size_t>(cand)] || g_.degree(cand) < need_deg) continue;
            if (!canonical(cand)) continue;
            budget_.tick();
            occupy(cand);
            branch_[static_cast<size_t>(hv)] = cand;
            if (room_left(unplaced_after(k))) stop = route(k, 0);
            branch_[static_cast<size_t>(hv)] = -1;
            release(cand);
        }
        for (int d = 1; d <= need_deg; ++d) ++need_ge_[static_cast<size_t>(d)];
        return stop;
    }

    int unplaced_after(int k) const { return h_.vertex_count() - k - 1; }

    bool route(int k, int i) {
        const auto& todo = edges_at_[static_cast<size_t>(k)];
        if (i == static_cast<int>(todo.size())) return place(k + 1);
        const int eidx = todo[static_cast<size_t>(i)];
        const Edge& he = h_.edges()[static_cast<size_t>(eidx)];
        const VertexId s = branch_[static_cast<size_t>(he.u)];
        const VertexId t = branch_[static_cast<size_t>(he.v)];
        std::vector<VertexId> path = {s};
        return extend(k, i, eidx, s, t, path);
    }

    bool extend(int k, int i, int eidx, VertexId cur, VertexId t, std::vector<VertexId>& path) {
        for (VertexId nb : g_.neighbors(cur)) {
            budget_.tick();
            if (nb == t) {
                path.push_back(t);
                paths_[static_cast<size_t>(eidx)] = path;
                bool stop = route(k, i + 1);
                path.pop_back();
                if (stop) return true;
                continue;
            }
            if (used_[static_cast<size_t>(nb)] || !canonical(nb)) continue;
            occupy(nb);
            path.push_back(nb);
            bool stop = false;
            // interiors eat the room the remaining branch vertices need
            if (room_left(unplaced_after(k)) && target_reachable(nb, t)) stop = extend(k, i, eidx, nb, t, path);
            path.pop_back();
            release(nb);
            if (stop) return true;
        }
        return false;
    }

    bool emit() {
        Embedding emb;
        emb.branch = branch_;
        emb.edge_paths = paths_;
        if (stop_at_first_) {
            found = std::move(emb);
            stop_requested_ = true;
            return true;
        }
        if (callback_ && callback_(emb)) {
            stop_requested_ = true;
            return true;
        }
        return false;
    }

    const Graph& h_;
    const Graph& g_;
    Budget& budget_;
    const std::function<bool(const Embedding&)>& callback_;
    bool stop_at_first_;
    bool stop_requested_ = false;

    std::vector<int> family_of_;
    std::vector<std::vector<VertexId>> families_;
    std::vector<bool> used_;
    int free_count_ = 0;
    int max_need_ = 0;
    std::vector<int> free_ge_, need_ge_;
    std::vector<VertexId> branch_;
    std::vector<std::vector<VertexId>> paths_;
    std::vector<VertexId> order_;
    std::vector<std::vector<int>> edges_at_;
};

}  // namespace

bool validate_embedding(const Graph& h, const Graph& g, const Embedding& emb) {
    if (static_cast<int>(emb.branch.size()) != h.vertex_count()) return false;
    if (emb.edge_paths.size() != h.edges().size()) return false;
    std::set<VertexId> branch_set;
    for (VertexId v : emb.branch) {
        if (!g.has_vertex(v) || !branch_set.insert(v).second) return false;
    }
    std::set<VertexId> interiors;
    for (size_t ei = 0; ei < emb.edge_paths.size(); ++ei) {
        const Edge& e = h.edges()[ei];
        const auto& p = emb.edge_paths[ei];
        if (p.size() < 2) return false;
        if (p.front() != emb.branch[static_cast<size_t>(e.u)] || p.back() != emb.branch[static_cast<size_t>(e.v)])
            return false;
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        std::set<VertexId> on_path(p.begin(), p.end());
        if (on_path.size() != p.size()) return false;
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (branch_set.count(p[i])) return false;        // interior hits a branch vertex
            if (!interiors.insert(p[i]).second) return false;  // paths overlap internally
        }
    }
    return true;
}

std::optional<Embedding> find_subdivision(const Graph& h, const Graph& g, Budget* budget) {
    Budget local(default_node_budget());
    Budget& bd = budget ? *budget : local;
    SubdivisionSearch search(h, g, bd, nullptr, true);
    search.run();
    if (search.found && !validate_embedding(h, g, *search.found)) throw Error("embedding failed validation");
    return search.found;
}

void enumerate_subdivisions(const Graph& h, const Graph& g, const std::function<bool(const Embedding&)>& callback,
                            Budget* budget) {
    Budget local(default_node_budget());
    Budget& bd = budget ? *budget : local;
    SubdivisionSearch search(h, g, bd, callback, false);
    search.run();
}

double midpoint_expansion_factor(const Graph& g, const Embedding& emb) {
    using Key = std::tuple<int, int, std::vector<VertexId>>;
    std::map<Key, std::pair<int, int>> fam;  // family -> (size, used)
    auto key_of = [&](VertexId v) {
        const RoleLabel& l = g.label(v);
        return Key(l.a, l.b, std::vector<VertexId>(g.neighbors(v).begin(), g.neighbors(v).end()));
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.label(v).kind == RoleKind::Midpoint) ++fam[key_of(v)].first;
    std::set<VertexId> occupied(emb.branch.begin(), emb.branch.end());
    for (const auto& p : emb.edge_paths) occupied.insert(p.begin(), p.end());
    for (VertexId v : occupied)
        if (g.label(v).kind == RoleKind::Midpoint) ++fam[key_of(v)].second;
    double factor = 1.0;
    for (const auto& [key, counts] : fam)
        for (int i = 0; i < counts.second; ++i) factor *= counts.first - i;
    return factor;
}

bool is_isomorphic(const Graph& a, const Graph& b, Budget* budget) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (VertexId v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (VertexId v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return find_subdivision(a, b, budget).has_value();
}

}  // namespace eposa
