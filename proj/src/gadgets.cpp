#include "eposa/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eposa/wall_geom.hpp"

namespace eposa {

std::vector<VertexId> HeinleinWall::interior() const {
    const std::array<VertexId, 4> t = terminals();
    std::set<VertexId> term(t.begin(), t.end());
    std::vector<VertexId> out;
    for (size_t j = 1; j + 1 < z.size(); ++j) out.push_back(z[j]);
    for (const auto& p : path_vertices) out.insert(out.end(), p.begin(), p.end());
    std::vector<VertexId> res;
    for (VertexId v : out)
        if (!term.count(v)) res.push_back(v);
    std::sort(res.begin(), res.end());
    return res;
}

namespace {

// The five edge families of the gadget, on caller-provided vertex ids.
void add_heinlein_edges(GraphBuilder& b, int r, VertexId a, VertexId bb, const std::vector<VertexId>& z,
                        const std::vector<std::vector<VertexId>>& u, std::vector<Edge>* edge_log = nullptr) {
    auto add = [&](VertexId x, VertexId y) {
        b.add_edge(x, y);
        if (edge_log) edge_log->emplace_back(x, y);
    };
    for (int j = 1; j <= r; ++j) {
        const auto& p = u[static_cast<size_t>(j - 1)];
        for (int i = 1; i < 2 * r; ++i) add(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(i)]);
        for (int i = 1; i <= r; ++i) {
            add(z[static_cast<size_t>(j - 1)], p[static_cast<size_t>(2 * i - 2)]);  // z_{j-1} u^j_{2i-1}
            add(z[static_cast<size_t>(j)], p[static_cast<size_t>(2 * i - 1)]);      // z_j u^j_{2i}
        }
        add(a, p.front());
        add(bb, p.back());
    }
    for (int i = 1; i <= r; ++i) add(z[static_cast<size_t>(i - 1)], z[static_cast<size_t>(i)]);
}

void check_heinlein_shape(const HeinleinWall& w) {
    const Graph& g = w.graph;
    const int r = w.r;
    if (g.vertex_count() != 2 * r * r + r + 3) throw Error("heinlein wall: wrong vertex count");
    if (g.edge_count() != 4 * r * r + 2 * r) throw Error("heinlein wall: wrong edge count");
    if (g.degree(w.a) != r || g.degree(w.b) != r) throw Error("heinlein wall: terminal degree");
    for (int j = 0; j <= r; ++j) {
        int expected = (j == 0 || j == r) ? r + 1 : 2 * r + 2;
        if (g.degree(w.z[static_cast<size_t>(j)]) != expected) throw Error("heinlein wall: bottleneck degree");
    }
    for (const auto& p : w.path_vertices)
        for (VertexId v : p)
            if (g.degree(v) != 3) throw Error("heinlein wall: path vertex degree");
}

}  // namespace

HeinleinWall heinlein_wall(int r) {
    if (r < 1) throw InvalidSizeError("heinlein wall size must be >= 1");
    HeinleinWall w;
    w.r = r;
    GraphBuilder b;
    w.a = b.add_vertex(RoleLabel::terminal('a'));
    w.b = b.add_vertex(RoleLabel::terminal('b'));
    for (int j = 0; j <= r; ++j) {
        RoleLabel l = j == 0 ? RoleLabel::terminal('c') : j == r ? RoleLabel::terminal('d') : RoleLabel::bottleneck(j);
        w.z.push_back(b.add_vertex(l));
    }
    for (int j = 1; j <= r; ++j) {
        std::vector<VertexId> p;
        for (int i = 1; i <= 2 * r; ++i) p.push_back(b.add_vertex(RoleLabel::path_vertex(j, i)));
        w.path_vertices.push_back(std::move(p));
    }
    add_heinlein_edges(b, r, w.a, w.b, w.z, w.path_vertices);
    w.graph = b.build();
    check_heinlein_shape(w);
    return w;
}

Graph elementary_grid(int m, int n) {
    if (m < 1 || n < 1) throw InvalidSizeError("grid dimensions must be >= 1");
    GraphBuilder b;
    auto id = [&](int i, int j) { return (i - 1) * n + (j - 1); };
    b.ensure_vertex(m * n - 1);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i < m) b.add_edge(id(i, j), id(i + 1, j));
            if (j < n) b.add_edge(id(i, j), id(i, j + 1));
        }
    return b.build();
}

namespace {

// Shared construction state for elementary walls in grid coordinates
// (rows 1..m+1, cols 1..2n+2), before renumbering to dense ids.
struct WallFrame {
    int m, n, R, C;
    std::vector<std::vector<bool>> alive;  // [i][j], 1-based

    explicit WallFrame(int m_, int n_) : m(m_), n(n_), R(m_ + 1), C(2 * n_ + 2) {
        alive.assign(static_cast<size_t>(R) + 1, std::vector<bool>(static_cast<size_t>(C) + 1, true));
    }

    // Vertical edge between rows i,i+1 at column j survives the removal rule.
    bool vertical(int i, int j) const { return (i % 2 == 1) == (j % 2 == 1); }

    std::vector<std::pair<int, int>> neighbors(int i, int j) const {
        std::vector<std::pair<int, int>> out;
        if (j > 1 && alive[i][j - 1]) out.push_back({i, j - 1});
        if (j < C && alive[i][j + 1]) out.push_back({i, j + 1});
        if (i > 1 && vertical(i - 1, j) && alive[i - 1][j]) out.push_back({i - 1, j});
        if (i < R && vertical(i, j) && alive[i + 1][j]) out.push_back({i + 1, j});
        return out;
    }

    // Column j' of the wall zigzags between grid columns 2j'-1 and 2j'.
    std::vector<std::pair<int, int>> zigzag(int jp) const {
        const int odd = 2 * jp - 1, even = 2 * jp;
        std::vector<std::pair<int, int>> seq = {{1, odd}};
        for (int i = 1; i <= m; ++i) {
            int at = (i % 2 == 1) ? odd : even;
            seq.push_back({i + 1, at});
            if (i < m) seq.push_back({i + 1, at == odd ? even : odd});
        }
        return seq;
    }
};

}  // namespace

Wall elementary_wall(int m, int n) {
    if (m < 1 || n < 1) throw InvalidSizeError("wall dimensions must be >= 1");
    WallFrame f(m, n);

    // Trim degree-1 vertices to a fixed point. On these gadgets exactly the
    // two loose corners go, in a single round; anything else is a bug.
    int removed = 0, rounds = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> doomed;
        for (int i = 1; i <= f.R; ++i)
            for (int j = 1; j <= f.C; ++j)
                if (f.alive[i][j] && f.neighbors(i, j).size() <= 1) doomed.push_back({i, j});
        for (auto [i, j] : doomed) f.alive[i][j] = false;
        removed += static_cast<int>(doomed.size());
        if (!doomed.empty()) changed = true, ++rounds;
    }
    if (removed != 2 || rounds != 1) throw Error("elementary wall trimming did not remove exactly the two corners");

    // Renumber survivors row-major.
    std::vector<std::vector<VertexId>> id(static_cast<size_t>(f.R) + 1,
                                          std::vector<VertexId>(static_cast<size_t>(f.C) + 1, -1));
    GraphBuilder b;
    for (int i = 1; i <= f.R; ++i)
        for (int j = 1; j <= f.C; ++j)
            if (f.alive[i][j]) id[i][j] = b.add_vertex(RoleLabel::wall_branch(i, j));
    for (int i = 1; i <= f.R; ++i)
        for (int j = 1; j <= f.C; ++j) {
            if (!f.alive[i][j]) continue;
            for (auto [i2, j2] : f.neighbors(i, j))
                if (std::pair(i, j) < std::pair(i2, j2)) b.add_edge(id[i][j], id[i2][j2]);
        }

    Wall w;
    w.kind = WallKind::Elementary;
    w.m = m;
    w.n = n;
    w.graph = b.build();

    for (int i = 1; i <= f.R; ++i) {
        std::vector<VertexId> row;
        for (int j = 1; j <= f.C; ++j)
            if (f.alive[i][j]) row.push_back(id[i][j]);
        w.rows.push_back(std::move(row));
    }
    for (int jp = 1; jp <= n + 1; ++jp) {
        std::vector<VertexId> col;
        for (auto [i, j] : f.zigzag(jp)) {
            if (!f.alive[i][j]) throw Error("wall column touches a trimmed vertex");
            col.push_back(id[i][j]);
        }
        w.columns.push_back(std::move(col));
    }
    for (int a = 1; a <= m; ++a)
        for (int bb = 1; bb <= n; ++bb) {
            int c0 = (a % 2 == 1) ? 2 * bb - 1 : 2 * bb;
            Brick brick;
            brick.row = a;
            brick.col = bb;
            for (auto [i, j] : {std::pair(a, c0), {a, c0 + 1}, {a, c0 + 2}, {a + 1, c0 + 2}, {a + 1, c0 + 1},
                                {a + 1, c0}}) {
                if (!f.alive[i][j]) throw Error("brick touches a trimmed vertex");
                brick.cycle.push_back(id[i][j]);
            }
            w.bricks.push_back(std::move(brick));
        }

    // First row, then down the last column, back along the last row, and up
    // the first column (interior only); junction vertices are shared.
    w.outercycle = w.rows.front();
    for (size_t i = 1; i < w.columns.back().size(); ++i) w.outercycle.push_back(w.columns.back()[i]);
    for (size_t i = w.rows.back().size() - 1; i-- > 0;) w.outercycle.push_back(w.rows.back()[i]);
    for (size_t i = w.columns.front().size() - 1; i-- > 1;) w.outercycle.push_back(w.columns.front()[i]);

    w.row_of.assign(static_cast<size_t>(w.graph.vertex_count()), -1);
    w.col_of.assign(static_cast<size_t>(w.graph.vertex_count()), -1);
    for (size_t i = 0; i < w.rows.size(); ++i)
        for (VertexId v : w.rows[i]) w.row_of[static_cast<size_t>(v)] = static_cast<int>(i);
    for (size_t i = 0; i < w.columns.size(); ++i)
        for (VertexId v : w.columns[i]) w.col_of[static_cast<size_t>(v)] = static_cast<int>(i);

    // Structural sanity: outercycle closes, rows/columns are paths.
    for (size_t i = 0; i < w.outercycle.size(); ++i) {
        VertexId x = w.outercycle[i], y = w.outercycle[(i + 1) % w.outercycle.size()];
        if (!w.graph.has_edge(x, y)) throw Error("outercycle is not a cycle");
    }
    std::set<VertexId> oc(w.outercycle.begin(), w.outercycle.end());
    if (oc.size() != w.outercycle.size()) throw Error("outercycle repeats a vertex");
    return w;
}

namespace {

void validate_wall_paths(const Wall& w) {
    auto check_seq = [&](const std::vector<VertexId>& seq, const char* what) {
        for (size_t i = 0; i + 1 < seq.size(); ++i)
            if (!w.graph.has_edge(seq[i], seq[i + 1])) throw Error(std::string(what) + " is not a path");
    };
    for (const auto& r : w.rows) check_seq(r, "wall row");
    for (const auto& c : w.columns) check_seq(c, "wall column");
    for (const auto& b : w.bricks) {
        if (b.cycle.size() < 3) throw Error("brick cycle too short");
        for (size_t i = 0; i < b.cycle.size(); ++i)
            if (!w.graph.has_edge(b.cycle[i], b.cycle[(i + 1) % b.cycle.size()]))
                throw Error("brick is not a cycle");
    }
    for (size_t i = 0; i < w.outercycle.size(); ++i)
        if (!w.graph.has_edge(w.outercycle[i], w.outercycle[(i + 1) % w.outercycle.size()]))
            throw Error("outercycle is not a cycle");
}

}  // namespace

Wall wall_prime(int m, int n) {
    if (m < 1 || n < 1) throw InvalidSizeError("wall dimensions must be >= 1");
    Wall ew = elementary_wall(m, n);
    const Graph& g = ew.graph;

    std::vector<bool> survivor(static_cast<size_t>(g.vertex_count()), false);
    int survivors = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int deg = g.degree(v);
        if (deg == 3) survivor[static_cast<size_t>(v)] = true, ++survivors;
        else if (deg != 2)
            throw Error("elementary wall has a vertex of degree " + std::to_string(deg));
    }
    if (survivors == 0) throw DegenerateWallError("wall' of size " + std::to_string(m) + "x" + std::to_string(n) +
                                                  " is degenerate: every vertex has degree 2");

    // Walk chains of degree-2 vertices between branch vertices.
    std::vector<VertexId> new_id(static_cast<size_t>(g.vertex_count()), -1);
    GraphBuilder b;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (survivor[static_cast<size_t>(v)]) new_id[static_cast<size_t>(v)] = b.add_vertex(g.label(v));

    std::set<std::pair<VertexId, VertexId>> chain_ends;  // one entry per chain per direction
    std::map<Edge, int> multiplicity;
    std::vector<bool> on_chain(static_cast<size_t>(g.vertex_count()), false);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (!survivor[static_cast<size_t>(s)]) continue;
        for (VertexId first : g.neighbors(s)) {
            VertexId prev = s, cur = first;
            while (!survivor[static_cast<size_t>(cur)]) {
                on_chain[static_cast<size_t>(cur)] = true;
                auto nb = g.neighbors(cur);
                VertexId next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (cur == s) throw DegenerateWallError("wall' contraction would create a loop");
            if (s < cur) ++multiplicity[Edge(s, cur)];
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!survivor[static_cast<size_t>(v)] && !on_chain[static_cast<size_t>(v)])
            throw DegenerateWallError("wall' has an all-degree-2 cycle");
    for (const auto& [e, mult] : multiplicity) {
        if (mult > 1)
            throw DegenerateWallError("wall' contraction would create a parallel edge");
        b.add_edge(new_id[static_cast<size_t>(e.u)], new_id[static_cast<size_t>(e.v)]);
    }

    Wall w;
    w.kind = WallKind::Prime;
    w.m = m;
    w.n = n;
    w.graph = b.build();

    auto surviving_seq = [&](const std::vector<VertexId>& seq) {
        std::vector<VertexId> out;
        for (VertexId v : seq)
            if (survivor[static_cast<size_t>(v)]) out.push_back(new_id[static_cast<size_t>(v)]);
        return out;
    };
    for (const auto& r : ew.rows) w.rows.push_back(surviving_seq(r));
    for (const auto& c : ew.columns) w.columns.push_back(surviving_seq(c));
    for (const auto& br : ew.bricks) {
        Brick nb;
        nb.row = br.row;
        nb.col = br.col;
        nb.cycle = surviving_seq(br.cycle);
        w.bricks.push_back(std::move(nb));
    }
    w.outercycle = surviving_seq(ew.outercycle);

    w.row_of.assign(static_cast<size_t>(w.graph.vertex_count()), -1);
    w.col_of.assign(static_cast<size_t>(w.graph.vertex_count()), -1);
    for (size_t i = 0; i < w.rows.size(); ++i)
        for (VertexId v : w.rows[i]) w.row_of[static_cast<size_t>(v)] = static_cast<int>(i);
    for (size_t i = 0; i < w.columns.size(); ++i)
        for (VertexId v : w.columns[i]) w.col_of[static_cast<size_t>(v)] = static_cast<int>(i);

    if (w.graph.max_degree() != 3 || !vertices_of_degree(w.graph, 0).empty() ||
        !vertices_of_degree(w.graph, 1).empty() || !vertices_of_degree(w.graph, 2).empty())
        throw Error("wall' is not cubic");
    if (cycle_rank(w.graph) != m * n) throw Error("wall' cycle rank is not m*n");
    validate_wall_paths(w);
    return w;
}

Graph multiply_edge(const Graph& g, Edge e, int k) {
    if (k < 1) throw InvalidSizeError("multiplicity must be >= 1");
    if (!g.has_edge(e.u, e.v))
        throw UnknownEdgeError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
    GraphBuilder b;
    b.ensure_vertex(g.vertex_count() - 1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) b.set_label(v, g.label(v));
    for (const Edge& f : g.edges())
        if (f != e) b.add_edge(f.u, f.v);
    for (int copy = 0; copy < k; ++copy) {
        VertexId mid = b.add_vertex(RoleLabel::midpoint(e.u, e.v, copy));
        b.add_edge(e.u, mid);
        b.add_edge(e.v, mid);
    }
    return b.build();
}

CounterexampleInstance build_z(const Graph& h, const WallDesignation& m, Edge e1, Edge e2, int r, int min_apart) {
    if (r < 1) throw InvalidSizeError("r must be >= 1");
    if (!h.is_subcubic()) throw NotSubcubicError("pattern graph has a vertex of degree > 3");
    if (!h.has_edge(e1.u, e1.v)) throw UnknownEdgeError("e1 is not an edge of the pattern");
    if (!h.has_edge(e2.u, e2.v)) throw UnknownEdgeError("e2 is not an edge of the pattern");
    if (e1 == e2) throw BadIncidenceError("e1 and e2 must be distinct");
    if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v)
        throw EdgesNotFarApartError("e1 and e2 share an endvertex");

    // Designation sanity + host->wall lookup.
    const Wall& wall = m.wall;
    if (static_cast<int>(m.to_host.size()) != wall.graph.vertex_count())
        throw BadIncidenceError("wall designation map has wrong size");
    std::map<VertexId, VertexId> host_to_wall;
    for (VertexId wv = 0; wv < wall.graph.vertex_count(); ++wv) {
        VertexId hv = m.to_host[static_cast<size_t>(wv)];
        if (!h.has_vertex(hv) || !host_to_wall.emplace(hv, wv).second)
            throw BadIncidenceError("wall designation map is not injective into the pattern");
    }
    for (const Edge& we : wall.graph.edges())
        if (!h.has_edge(m.to_host[static_cast<size_t>(we.u)], m.to_host[static_cast<size_t>(we.v)]))
            throw BadIncidenceError("designated wall is not a subgraph of the pattern");

    auto wall_vertex = [&](VertexId hv) -> VertexId {
        auto it = host_to_wall.find(hv);
        return it == host_to_wall.end() ? -1 : it->second;
    };
    auto is_proper_branch = [&](VertexId hv) {
        VertexId wv = wall_vertex(hv);
        return wv >= 0 && wall.graph.degree(wv) == 3;
    };
    auto orient = [&](Edge e, const char* name) -> std::pair<VertexId, VertexId> {
        VertexId wu = wall_vertex(e.u), wv = wall_vertex(e.v);
        if (wu < 0 || wv < 0 || !wall.graph.has_edge(wu, wv))
            throw BadIncidenceError(std::string(name) + " is not an edge of the designated wall");
        if (is_proper_branch(e.u)) return {e.u, e.v};
        if (is_proper_branch(e.v)) return {e.v, e.u};
        throw BadIncidenceError(std::string(name) + " is not incident with a proper branch vertex");
    };
    auto [va, vb] = orient(e1, "e1");
    auto [vc, vd] = orient(e2, "e2");

    for (VertexId x : {va, vb})
        for (VertexId y : {vc, vd})
            if (!is_d_apart(wall, wall_vertex(x), wall_vertex(y), min_apart))
                throw EdgesNotFarApartError("endpoints of e1 and e2 are not " + std::to_string(min_apart) +
                                            "-apart in the designated wall");

    CounterexampleInstance inst;
    inst.pattern = h;
    inst.r = r;
    inst.e1 = e1;
    inst.e2 = e2;
    inst.min_apart = min_apart;

    GraphBuilder b;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        RoleLabel l = h.label(v);
        if (v == va) l = RoleLabel::terminal('a');
        else if (v == vb) l = RoleLabel::terminal('b');
        else if (v == vc) l = RoleLabel::terminal('c');
        else if (v == vd) l = RoleLabel::terminal('d');
        b.add_vertex(l);
        inst.star_map.push_back(v);
    }

    const int R = 2 * r;  // wall size
    for (const Edge& e : h.edges()) {
        if (e == e1 || e == e2) continue;
        MidpointFamily fam;
        fam.pattern_edge = e;
        for (int copy = 0; copy < R; ++copy) {
            VertexId mid = b.add_vertex(RoleLabel::midpoint(e.u, e.v, copy));
            b.add_edge(e.u, mid);
            b.add_edge(e.v, mid);
            fam.midpoints.push_back(mid);
        }
        inst.families.push_back(std::move(fam));
    }

    HeinleinWall& hw = inst.wall;
    hw.r = R;
    hw.a = va;
    hw.b = vb;
    hw.z.push_back(vc);
    for (int j = 1; j < R; ++j) hw.z.push_back(b.add_vertex(RoleLabel::bottleneck(j)));
    hw.z.push_back(vd);
    for (int j = 1; j <= R; ++j) {
        std::vector<VertexId> p;
        for (int i = 1; i <= 2 * R; ++i) p.push_back(b.add_vertex(RoleLabel::path_vertex(j, i)));
        hw.path_vertices.push_back(std::move(p));
    }
    add_heinlein_edges(b, R, hw.a, hw.b, hw.z, hw.path_vertices, &inst.wall_edges);
    std::sort(inst.wall_edges.begin(), inst.wall_edges.end());

    inst.z = b.build();
    hw.graph = inst.z;

    // Designated M*: star images of the wall branch vertices; each wall edge
    // other than e1, e2 is realized by its lexicographically first midpoint.
    for (VertexId wv = 0; wv < wall.graph.vertex_count(); ++wv)
        inst.m_star.branch_in_z.push_back(inst.star_map[static_cast<size_t>(m.to_host[static_cast<size_t>(wv)])]);
    for (const Edge& we : wall.graph.edges()) {
        Edge he(m.to_host[static_cast<size_t>(we.u)], m.to_host[static_cast<size_t>(we.v)]);
        if (he == e1 || he == e2) continue;
        for (const auto& fam : inst.families)
            if (fam.pattern_edge == he) {
                inst.m_star.edge_midpoint.emplace_back(he, fam.midpoints.front());
                break;
            }
    }

    validate_instance(inst);
    return inst;
}

void validate_instance(const CounterexampleInstance& inst) {
    const Graph& z = inst.z;
    const Graph& h = inst.pattern;
    const int R = 2 * inst.r;

    if (static_cast<int>(inst.star_map.size()) != h.vertex_count()) throw Error("instance: star map size");
    std::set<VertexId> starred(inst.star_map.begin(), inst.star_map.end());
    if (starred.size() != inst.star_map.size()) throw Error("instance: star map not injective");

    const long long expected =
        h.vertex_count() + static_cast<long long>(2 * inst.r) * (h.edge_count() - 2) + 8LL * inst.r * inst.r +
        2LL * inst.r - 1;
    if (z.vertex_count() != expected) throw Error("instance: |V(Z)| does not match the size formula");

    // Per multiplied pattern edge: exactly 2r midpoint copies, each of
    // degree 2, adjacent to both starred endpoints.
    std::set<Edge> with_family;
    for (const auto& fam : inst.families) {
        if (static_cast<int>(fam.midpoints.size()) != R) throw Error("instance: family size is not 2r");
        if (fam.pattern_edge == inst.e1 || fam.pattern_edge == inst.e2) throw Error("instance: family for removed edge");
        if (!h.has_edge(fam.pattern_edge.u, fam.pattern_edge.v)) throw Error("instance: family for a non-edge");
        with_family.insert(fam.pattern_edge);
        VertexId gu = inst.star_map[static_cast<size_t>(fam.pattern_edge.u)];
        VertexId gv = inst.star_map[static_cast<size_t>(fam.pattern_edge.v)];
        for (VertexId mid : fam.midpoints) {
            if (z.degree(mid) != 2 || !z.has_edge(mid, gu) || !z.has_edge(mid, gv))
                throw Error("instance: malformed midpoint");
            if (z.label(mid).kind != RoleKind::Midpoint) throw Error("instance: midpoint label missing");
        }
        // No stray copies: every midpoint-labeled common neighbor belongs to
        // the family.
        int count = 0;
        for (VertexId x : z.neighbors(gu))
            if (z.label(x).kind == RoleKind::Midpoint && z.has_edge(x, gv)) ++count;
        if (count != R) throw Error("instance: family does not have exactly 2r midpoint copies");
    }
    if (static_cast<int>(with_family.size()) != h.edge_count() - 2)
        throw Error("instance: not every surviving pattern edge is multiplied");
    VertexId za = inst.star_map[static_cast<size_t>(inst.e1.u)];  // (unordered) endpoints must be wall terminals
    VertexId zb = inst.star_map[static_cast<size_t>(inst.e1.v)];
    VertexId zc = inst.star_map[static_cast<size_t>(inst.e2.u)];
    VertexId zd = inst.star_map[static_cast<size_t>(inst.e2.v)];
    if (std::set<VertexId>{inst.wall.a, inst.wall.b} != std::set<VertexId>{za, zb})
        throw Error("instance: e1 endpoints are not a*, b*");
    if (std::set<VertexId>{inst.wall.c(), inst.wall.d()} != std::set<VertexId>{zc, zd})
        throw Error("instance: e2 endpoints are not c*, d*");

    // Wall shape: regenerate the expected edge list and compare.
    if (inst.wall.r != R) throw Error("instance: wall size is not 2r");
    GraphBuilder dummy;
    std::vector<Edge> expected_edges;
    dummy.ensure_vertex(z.vertex_count() - 1);
    add_heinlein_edges(dummy, R, inst.wall.a, inst.wall.b, inst.wall.z, inst.wall.path_vertices, &expected_edges);
    std::sort(expected_edges.begin(), expected_edges.end());
    if (expected_edges != inst.wall_edges) throw Error("instance: wall edge list mismatch");
    for (const Edge& e : inst.wall_edges)
        if (!z.has_edge(e.u, e.v)) throw Error("instance: wall edge missing from Z");

    // M* is disjoint from W^0 and uses valid midpoints.
    std::set<VertexId> interior;
    for (VertexId v : inst.wall.interior()) interior.insert(v);
    for (VertexId bv : inst.m_star.branch_in_z)
        if (interior.count(bv)) throw Error("instance: M* branch vertex inside W^0");
    for (const auto& [he, mid] : inst.m_star.edge_midpoint) {
        if (interior.count(mid)) throw Error("instance: M* midpoint inside W^0");
        if (z.label(mid).kind != RoleKind::Midpoint) throw Error("instance: M* midpoint is not a midpoint");
    }
}

}  // namespace eposa
