#include "eposa/io.hpp"

#include <fstream>
#include <sstream>

namespace eposa {

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

void append_bits_as_g6(std::string& out, const std::vector<bool>& bits) {
    for (size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (size_t i = 0; i < 6; ++i) {
            value <<= 1;
            if (k + i < bits.size() && bits[k + i]) value |= 1;
        }
        out.push_back(static_cast<char>(value + kG6Lo));
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    } else {
        throw InvalidSizeError("graph6 encoding supports at most 258047 vertices");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (VertexId j = 1; j < n; ++j)
        for (VertexId i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits_as_g6(out, bits);
    return out;
}

Graph decode_graph6(const std::string& bytes) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (bytes.size() < pos + k) throw MalformedGraph6Error("graph6 string truncated");
    };
    auto val = [&](size_t i) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        if (c < kG6Lo || c > kG6Hi)
            throw MalformedGraph6Error("graph6 byte out of range at position " + std::to_string(i));
        return static_cast<int>(c) - kG6Lo;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(bytes[0]) == 126) {
        need(4);
        if (static_cast<unsigned char>(bytes[1]) == 126)
            throw MalformedGraph6Error("graph6 >258047 vertices unsupported");
        n = (static_cast<long long>(val(1)) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }

    const long long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    need(nbytes);
    if (bytes.size() != pos + nbytes) throw MalformedGraph6Error("graph6 string has trailing bytes");

    GraphBuilder b;
    b.ensure_vertex(static_cast<VertexId>(n) - 1);
    long long bit = 0;
    for (VertexId j = 1; j < n; ++j) {
        for (VertexId i = 0; i < j; ++i, ++bit) {
            int byte = val(pos + static_cast<size_t>(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
        }
    }
    return b.build();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph eposa {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::string d = g.label(v).display();
        if (d.empty())
            out << "  " << v << ";\n";
        else
            out << "  " << v << " [label=\"" << d << "\"];\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

Json label_to_json(const RoleLabel& l) {
    Json j;
    switch (l.kind) {
        case RoleKind::Plain: j["role"] = "plain"; break;
        case RoleKind::TerminalA: j["role"] = "terminal_a"; break;
        case RoleKind::TerminalB: j["role"] = "terminal_b"; break;
        case RoleKind::TerminalC: j["role"] = "terminal_c"; break;
        case RoleKind::TerminalD: j["role"] = "terminal_d"; break;
        case RoleKind::Bottleneck:
            j["role"] = "bottleneck";
            j["index"] = l.a;
            break;
        case RoleKind::WallBranch:
            j["role"] = "wall_branch";
            j["row"] = l.a;
            j["col"] = l.b;
            break;
        case RoleKind::PathVertex:
            j["role"] = "path_vertex";
            j["path"] = l.a;
            j["pos"] = l.b;
            break;
        case RoleKind::Midpoint:
            j["role"] = "midpoint";
            j["edge"] = {l.a, l.b};
            j["copy"] = l.c;
            break;
    }
    return j;
}

RoleLabel label_from_json(const Json& j) {
    const std::string role = j.at("role").get<std::string>();
    if (role == "plain") return RoleLabel::plain();
    if (role == "terminal_a") return RoleLabel::terminal('a');
    if (role == "terminal_b") return RoleLabel::terminal('b');
    if (role == "terminal_c") return RoleLabel::terminal('c');
    if (role == "terminal_d") return RoleLabel::terminal('d');
    if (role == "bottleneck") return RoleLabel::bottleneck(j.at("index").get<int>());
    if (role == "wall_branch") return RoleLabel::wall_branch(j.at("row").get<int>(), j.at("col").get<int>());
    if (role == "path_vertex") return RoleLabel::path_vertex(j.at("path").get<int>(), j.at("pos").get<int>());
    if (role == "midpoint")
        return RoleLabel::midpoint(j.at("edge").at(0).get<VertexId>(), j.at("edge").at(1).get<VertexId>(),
                                   j.at("copy").get<int>());
    throw MalformedInputError("unknown role: " + role);
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }
Edge edge_from_json(const Json& j) { return Edge(j.at(0).get<VertexId>(), j.at(1).get<VertexId>()); }

Json id_vector_json(const std::vector<VertexId>& v) { return Json(v); }

std::vector<VertexId> id_vector_from_json(const Json& j) { return j.get<std::vector<VertexId>>(); }

}  // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
    j["edges"] = std::move(edges);
    Json labels = Json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.label(v).kind != RoleKind::Plain) labels[std::to_string(v)] = label_to_json(g.label(v));
    j["labels"] = std::move(labels);
    return j;
}

Graph graph_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 0) throw MalformedInputError("graph json: negative vertex count");
        GraphBuilder b;
        b.ensure_vertex(n - 1);
        for (const auto& e : j.at("edges")) {
            VertexId u = e.at(0).get<VertexId>(), v = e.at(1).get<VertexId>();
            if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedInputError("graph json: edge endpoint out of range");
            b.add_edge(u, v);
        }
        if (j.contains("labels"))
            for (const auto& [key, val] : j.at("labels").items()) {
                int v = std::stoi(key);
                if (v < 0 || v >= n) throw MalformedInputError("graph json: label vertex out of range");
                b.set_label(v, label_from_json(val));
            }
        return b.build();
    } catch (const Json::exception& e) {
        throw MalformedInputError(std::string("bad graph json: ") + e.what());
    }
}

Json heinlein_to_json(const HeinleinWall& w) {
    Json j;
    j["graph"] = graph_to_json(w.graph);
    Json h;
    h["r"] = w.r;
    h["a"] = w.a;
    h["b"] = w.b;
    h["z"] = id_vector_json(w.z);
    Json pv = Json::array();
    for (const auto& p : w.path_vertices) pv.push_back(id_vector_json(p));
    h["path_vertices"] = std::move(pv);
    j["heinlein"] = std::move(h);
    return j;
}

HeinleinWall heinlein_from_json(const Json& j) {
    try {
        HeinleinWall w;
        w.graph = graph_from_json(j.at("graph"));
        const Json& h = j.at("heinlein");
        w.r = h.at("r").get<int>();
        w.a = h.at("a").get<VertexId>();
        w.b = h.at("b").get<VertexId>();
        w.z = id_vector_from_json(h.at("z"));
        for (const auto& p : h.at("path_vertices")) w.path_vertices.push_back(id_vector_from_json(p));
        return w;
    } catch (const Json::exception& e) {
        throw MalformedInputError(std::string("bad heinlein json: ") + e.what());
    }
}

namespace {

void rebuild_wall_index(Wall& w) {
    w.row_of.assign(static_cast<size_t>(w.graph.vertex_count()), -1);
    w.col_of.assign(static_cast<size_t>(w.graph.vertex_count()), -1);
    for (size_t i = 0; i < w.rows.size(); ++i)
        for (VertexId v : w.rows[i]) w.row_of[static_cast<size_t>(v)] = static_cast<int>(i);
    for (size_t i = 0; i < w.columns.size(); ++i)
        for (VertexId v : w.columns[i]) w.col_of[static_cast<size_t>(v)] = static_cast<int>(i);
}

}  // namespace

Json wall_to_json(const Wall& w) {
    Json j;
    j["graph"] = graph_to_json(w.graph);
    Json ww;
    ww["kind"] = w.kind == WallKind::Elementary ? "elementary" : "prime";
    ww["m"] = w.m;
    ww["n"] = w.n;
    Json rows = Json::array();
    for (const auto& r : w.rows) rows.push_back(id_vector_json(r));
    ww["rows"] = std::move(rows);
    Json cols = Json::array();
    for (const auto& c : w.columns) cols.push_back(id_vector_json(c));
    ww["columns"] = std::move(cols);
    Json bricks = Json::array();
    for (const auto& b : w.bricks) {
        Json bj;
        bj["row"] = b.row;
        bj["col"] = b.col;
        bj["cycle"] = id_vector_json(b.cycle);
        bricks.push_back(std::move(bj));
    }
    ww["bricks"] = std::move(bricks);
    ww["outercycle"] = id_vector_json(w.outercycle);
    j["wall"] = std::move(ww);
    return j;
}

Wall wall_from_json(const Json& j) {
    try {
        Wall w;
        w.graph = graph_from_json(j.at("graph"));
        const Json& ww = j.at("wall");
        w.kind = ww.at("kind").get<std::string>() == "elementary" ? WallKind::Elementary : WallKind::Prime;
        w.m = ww.at("m").get<int>();
        w.n = ww.at("n").get<int>();
        for (const auto& r : ww.at("rows")) w.rows.push_back(id_vector_from_json(r));
        for (const auto& c : ww.at("columns")) w.columns.push_back(id_vector_from_json(c));
        for (const auto& b : ww.at("bricks")) {
            Brick br;
            br.row = b.at("row").get<int>();
            br.col = b.at("col").get<int>();
            br.cycle = id_vector_from_json(b.at("cycle"));
            w.bricks.push_back(std::move(br));
        }
        w.outercycle = id_vector_from_json(ww.at("outercycle"));
        rebuild_wall_index(w);
        return w;
    } catch (const Json::exception& e) {
        throw MalformedInputError(std::string("bad wall json: ") + e.what());
    }
}

Json instance_to_json(const CounterexampleInstance& inst) {
    Json j;
    j["graph"] = graph_to_json(inst.z);
    Json in;
    in["pattern"] = graph_to_json(inst.pattern);
    in["star_map"] = id_vector_json(inst.star_map);
    in["r"] = inst.r;
    in["e1"] = edge_json(inst.e1);
    in["e2"] = edge_json(inst.e2);
    in["min_apart"] = inst.min_apart;
    Json fams = Json::array();
    for (const auto& f : inst.families) {
        Json fj;
        fj["edge"] = edge_json(f.pattern_edge);
        fj["midpoints"] = id_vector_json(f.midpoints);
        fams.push_back(std::move(fj));
    }
    in["families"] = std::move(fams);
    Json wj = heinlein_to_json(inst.wall);
    wj.erase("graph");  // wall vertex ids refer into Z; no standalone graph
    in["wall"] = std::move(wj["heinlein"]);
    Json wedges = Json::array();
    for (const Edge& e : inst.wall_edges) wedges.push_back(edge_json(e));
    in["wall_edges"] = std::move(wedges);
    Json ms;
    ms["branch_in_z"] = id_vector_json(inst.m_star.branch_in_z);
    Json em = Json::array();
    for (const auto& [e, mid] : inst.m_star.edge_midpoint) {
        Json ej;
        ej["edge"] = edge_json(e);
        ej["mid"] = mid;
        em.push_back(std::move(ej));
    }
    ms["edge_midpoint"] = std::move(em);
    in["m_star"] = std::move(ms);
    j["instance"] = std::move(in);
    return j;
}

CounterexampleInstance instance_from_json(const Json& j) {
    try {
        CounterexampleInstance inst;
        inst.z = graph_from_json(j.at("graph"));
        const Json& in = j.at("instance");
        inst.pattern = graph_from_json(in.at("pattern"));
        inst.star_map = id_vector_from_json(in.at("star_map"));
        inst.r = in.at("r").get<int>();
        inst.e1 = edge_from_json(in.at("e1"));
        inst.e2 = edge_from_json(in.at("e2"));
        inst.min_apart = in.at("min_apart").get<int>();
        for (const auto& f : in.at("families")) {
            MidpointFamily fam;
            fam.pattern_edge = edge_from_json(f.at("edge"));
            fam.midpoints = id_vector_from_json(f.at("midpoints"));
            inst.families.push_back(std::move(fam));
        }
        const Json& wj = in.at("wall");
        inst.wall.r = wj.at("r").get<int>();
        inst.wall.a = wj.at("a").get<VertexId>();
        inst.wall.b = wj.at("b").get<VertexId>();
        inst.wall.z = id_vector_from_json(wj.at("z"));
        for (const auto& p : wj.at("path_vertices")) inst.wall.path_vertices.push_back(id_vector_from_json(p));
        inst.wall.graph = inst.z;  // wall ids live in Z
        for (const auto& e : in.at("wall_edges")) inst.wall_edges.push_back(edge_from_json(e));
        inst.m_star.branch_in_z = id_vector_from_json(in.at("m_star").at("branch_in_z"));
        for (const auto& em : in.at("m_star").at("edge_midpoint"))
            inst.m_star.edge_midpoint.emplace_back(edge_from_json(em.at("edge")), em.at("mid").get<VertexId>());
        return inst;
    } catch (const Json::exception& e) {
        throw MalformedInputError(std::string("bad instance json: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << contents;
    if (!out) throw Error("write to " + path + " failed");
}

std::array<VertexId, 4> detect_terminals(const Graph& g) {
    VertexId a = -1, b = -1, c = -1, d = -1;
    int min_bn = -1, max_bn = -1;
    VertexId min_bv = -1, max_bv = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const RoleLabel& l = g.label(v);
        switch (l.kind) {
            case RoleKind::TerminalA: a = v; break;
            case RoleKind::TerminalB: b = v; break;
            case RoleKind::TerminalC: c = v; break;
            case RoleKind::TerminalD: d = v; break;
            case RoleKind::Bottleneck:
                if (min_bn < 0 || l.a < min_bn) min_bn = l.a, min_bv = v;
                if (max_bn < 0 || l.a > max_bn) max_bn = l.a, max_bv = v;
                break;
            default: break;
        }
    }
    if (c < 0) c = min_bv;
    if (d < 0) d = max_bv;
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw MalformedInputError("graph does not carry the four terminal labels");
    return {a, b, c, d};
}

}  // namespace eposa
