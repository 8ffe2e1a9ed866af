#include "eposa/menger.hpp"

#include <algorithm>
#include <set>

namespace eposa {

namespace {

constexpr int kUncuttable = 1 << 20;

// Unit-vertex-capacity flow network for a-to-S connectivity. Every vertex
// except a is split into in/out with capacity 1; target vertices are pure
// sinks (in -> SINK, capacity 1), so flow paths stop at their first target
// and are pairwise disjoint except at a. Adjacency arcs are uncuttable, so
// every min cut consists of vertex arcs, i.e. a vertex set not containing a.
class FanFlow {
  public:
    FanFlow(const Graph& g, VertexId a, const std::vector<VertexId>& targets) : g_(g), a_(a) {
        if (!g.has_vertex(a)) throw Error("flow source out of range");
        is_target_.assign(static_cast<size_t>(g.vertex_count()), false);
        for (VertexId t : targets) {
            if (!g.has_vertex(t)) throw Error("flow target out of range");
            if (t == a) throw Error("source must not be a target");
            is_target_[static_cast<size_t>(t)] = true;
        }
        const int n = g.vertex_count();
        node_count_ = 2 * n + 2;  // 2v = v_in, 2v+1 = v_out, 2n = source, 2n+1 = sink
        head_.assign(static_cast<size_t>(node_count_), -1);
        vertex_arc_.assign(static_cast<size_t>(n), -1);
        for (VertexId v = 0; v < n; ++v) {
            if (v == a_) continue;
            vertex_arc_[static_cast<size_t>(v)] = static_cast<int>(to_.size());
            if (is_target_[static_cast<size_t>(v)])
                add_arc(in(v), sink(), 1);
            else
                add_arc(in(v), out(v), 1);
        }
        for (const Edge& e : g.edges()) {
            link(e.u, e.v);
            link(e.v, e.u);
        }
    }

    int max_flow(int stop_at) {
        int flow = 0;
        while (flow < stop_at && augment()) ++flow;
        return flow;
    }

    // Vertices of a min cut (call after max_flow ran to exhaustion).
    std::vector<VertexId> min_cut_vertices() const {
        std::vector<bool> seen = residual_reachable();
        std::vector<VertexId> cut;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (v == a_) continue;
            int arc = vertex_arc_[static_cast<size_t>(v)];
            if (arc < 0) continue;
            if (seen[static_cast<size_t>(in(v))] && !seen[static_cast<size_t>(to_[static_cast<size_t>(arc)])] &&
                cap_[static_cast<size_t>(arc)] == 0)
                cut.push_back(v);
        }
        return cut;
    }

    // Splits the current flow into vertex paths starting at a.
    std::vector<std::vector<VertexId>> decompose(int flow_value) {
        std::vector<int> flow_left(cap_.size(), 0);
        for (size_t arc = 0; arc < cap_.size(); arc += 2)
            flow_left[arc] = orig_cap_[arc] - cap_[arc];
        std::vector<std::vector<VertexId>> paths;
        for (int k = 0; k < flow_value; ++k) {
            std::vector<VertexId> path = {a_};
            int node = source();
            while (node != sink()) {
                int taken = -1;
                for (int arc = head_[static_cast<size_t>(node)]; arc != -1; arc = next_[static_cast<size_t>(arc)])
                    if (arc % 2 == 0 && flow_left[static_cast<size_t>(arc)] > 0) {
                        taken = arc;
                        break;
                    }
                if (taken < 0) throw Error("flow decomposition stuck");
                --flow_left[static_cast<size_t>(taken)];
                node = to_[static_cast<size_t>(taken)];
                if (node != sink() && node % 2 == 0) path.push_back(static_cast<VertexId>(node / 2));
            }
            paths.push_back(std::move(path));
        }
        return paths;
    }

  private:
    int in(VertexId v) const { return 2 * v; }
    int out(VertexId v) const { return 2 * v + 1; }
    int source() const { return 2 * g_.vertex_count(); }
    int sink() const { return 2 * g_.vertex_count() + 1; }

    void add_arc(int from, int to, int cap) {
        to_.push_back(to);
        cap_.push_back(cap);
        orig_cap_.push_back(cap);
        next_.push_back(head_[static_cast<size_t>(from)]);
        head_[static_cast<size_t>(from)] = static_cast<int>(to_.size()) - 1;
        to_.push_back(from);
        cap_.push_back(0);
        orig_cap_.push_back(0);
        next_.push_back(head_[static_cast<size_t>(to)]);
        head_[static_cast<size_t>(to)] = static_cast<int>(to_.size()) - 1;
    }

    void link(VertexId from, VertexId to) {
        if (is_target_[static_cast<size_t>(from)]) return;  // targets have no pass-through
        if (to == a_) return;
        int src = from == a_ ? source() : out(from);
        add_arc(src, in(to), kUncuttable);
    }

    bool augment() {
        std::vector<int> parent_arc(static_cast<size_t>(node_count_), -1);
        std::vector<bool> seen(static_cast<size_t>(node_count_), false);
        std::vector<int> queue = {source()};
        seen[static_cast<size_t>(source())] = true;
        for (size_t qi = 0; qi < queue.size() && !seen[static_cast<size_t>(sink())]; ++qi) {
            int node = queue[qi];
            for (int arc = head_[static_cast<size_t>(node)]; arc != -1; arc = next_[static_cast<size_t>(arc)]) {
                if (cap_[static_cast<size_t>(arc)] <= 0) continue;
                int nx = to_[static_cast<size_t>(arc)];
                if (seen[static_cast<size_t>(nx)]) continue;
                seen[static_cast<size_t>(nx)] = true;
                parent_arc[static_cast<size_t>(nx)] = arc;
                queue.push_back(nx);
            }
        }
        if (!seen[static_cast<size_t>(sink())]) return false;
        for (int node = sink(); node != source();) {
            int arc = parent_arc[static_cast<size_t>(node)];
            cap_[static_cast<size_t>(arc)] -= 1;
            cap_[static_cast<size_t>(arc ^ 1)] += 1;
            node = to_[static_cast<size_t>(arc ^ 1)];
        }
        return true;
    }

    std::vector<bool> residual_reachable() const {
        std::vector<bool> seen(static_cast<size_t>(node_count_), false);
        std::vector<int> queue = {source()};
        seen[static_cast<size_t>(source())] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int node = queue[qi];
            for (int arc = head_[static_cast<size_t>(node)]; arc != -1; arc = next_[static_cast<size_t>(arc)]) {
                if (cap_[static_cast<size_t>(arc)] <= 0) continue;
                int nx = to_[static_cast<size_t>(arc)];
                if (!seen[static_cast<size_t>(nx)]) {
                    seen[static_cast<size_t>(nx)] = true;
                    queue.push_back(nx);
                }
            }
        }
        return seen;
    }

    const Graph& g_;
    VertexId a_;
    std::vector<bool> is_target_;
    int node_count_ = 0;
    std::vector<int> head_, next_, to_, cap_, orig_cap_;
    std::vector<int> vertex_arc_;
};

}  // namespace

int max_fan_size(const Graph& g, VertexId a, const std::vector<VertexId>& targets) {
    if (targets.empty()) return 0;
    FanFlow flow(g, a, targets);
    return flow.max_flow(g.vertex_count() + 1);
}

std::optional<Separator> min_vertex_separator(const Graph& g, VertexId a, const std::vector<VertexId>& targets,
                                              int bound) {
    if (bound < 0) throw Error("separator bound must be >= 0");
    for (VertexId t : targets)
        if (t == a) throw Error("separator source contained in targets");
    FanFlow flow(g, a, targets);
    int value = flow.max_flow(g.vertex_count() + 1);
    if (value > bound) return std::nullopt;
    Separator sep;
    sep.vertices = flow.min_cut_vertices();
    std::sort(sep.vertices.begin(), sep.vertices.end());

    std::set<VertexId> cut(sep.vertices.begin(), sep.vertices.end());
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::vector<VertexId> stack = {a};
    seen[static_cast<size_t>(a)] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        sep.side_a.push_back(v);
        for (VertexId w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)] && !cut.count(w)) {
                seen[static_cast<size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    std::sort(sep.side_a.begin(), sep.side_a.end());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!seen[static_cast<size_t>(v)] && !cut.count(v)) sep.side_b.push_back(v);
    return sep;
}

std::optional<Fan> three_fan(const Graph& g, VertexId v, const std::vector<VertexId>& s) {
    if (s.empty()) return std::nullopt;
    for (VertexId t : s)
        if (t == v) throw Error("three_fan: center contained in target set");
    FanFlow flow(g, v, s);
    if (flow.max_flow(3) < 3) return std::nullopt;
    auto paths = flow.decompose(3);
    Fan fan;
    fan.center = v;
    for (size_t i = 0; i < 3; ++i) fan.legs[i] = std::move(paths[i]);
    return fan;
}

bool validate_fan(const Graph& g, const Fan& f, const std::vector<VertexId>& s) {
    std::set<VertexId> targets(s.begin(), s.end());
    std::set<VertexId> used;  // all leg vertices except the shared center
    for (const auto& leg : f.legs) {
        if (leg.size() < 2 || leg.front() != f.center) return false;
        if (!targets.count(leg.back())) return false;
        for (size_t i = 0; i + 1 < leg.size(); ++i)
            if (!g.has_edge(leg[i], leg[i + 1])) return false;
        for (size_t i = 1; i < leg.size(); ++i) {
            if (i + 1 < leg.size() && targets.count(leg[i])) return false;  // interior hits S
            if (!used.insert(leg[i]).second) return false;                  // legs overlap
        }
    }
    return true;
}

std::vector<VertexId> compute_b_m(const Graph& g, const std::vector<VertexId>& branch_set) {
    if (branch_set.empty()) throw Error("compute_b_m: empty branch set");
    std::set<VertexId> branch(branch_set.begin(), branch_set.end());
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<VertexId> targets;
        for (VertexId t : branch)
            if (t != v) targets.push_back(t);
        if (targets.size() < 3) continue;
        if (three_fan(g, v, targets)) out.push_back(v);
    }
    return out;
}

}  // namespace eposa
