// eposa: generators and exact verifiers for Heinlein-wall counterexample
// gadgets. Exit codes: 0 = property holds / output written, 1 = property
// fails (witness in the report), 2 = usage or input error, 3 = node budget
// exhausted before the search completed.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "eposa/gadgets.hpp"
#include "eposa/graph.hpp"
#include "eposa/hitting.hpp"
#include "eposa/io.hpp"
#include "eposa/linkage.hpp"
#include "eposa/menger.hpp"
#include "eposa/planarity.hpp"
#include "eposa/subdivision.hpp"
#include "eposa/wall_geom.hpp"
#include "eposa/width.hpp"

namespace {

using eposa::Json;

constexpr const char* kVersion = "0.1.0";

std::string fnv64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

struct ReportSink {
    Json report;
    std::string out_path;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    ReportSink(int argc, char** argv, const std::string& claim) {
        std::ostringstream cmd;
        for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
        report["tool"] = "eposa";
        report["version"] = kVersion;
        report["command"] = cmd.str();
        report["claim"] = claim;
        report["witness"] = nullptr;
    }

    void set_instance_file(const std::string& path, const std::string& contents) {
        Json inst;
        inst["file"] = path;
        inst["fnv64"] = fnv64_hex(contents);
        report["instance"] = inst;
    }

    void finish(const std::string& result, std::uint64_t nodes) {
        report["result"] = result;
        report["nodes_explored"] = nodes;
        report["wall_clock_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
        std::string text = report.dump(2) + "\n";
        if (!out_path.empty())
            eposa::write_file(out_path, text);
        else
            std::cout << text;
    }
};

Json path_json(const std::vector<eposa::VertexId>& p) { return Json(p); }

Json edges_json(const std::vector<eposa::Edge>& edges) {
    Json out = Json::array();
    for (const auto& e : edges) out.push_back(Json::array({e.u, e.v}));
    return out;
}

Json linkage_json(const eposa::Linkage& l) {
    Json j;
    j["path_ab"] = path_json(l.path_ab);
    j["path_cd"] = path_json(l.path_cd);
    return j;
}

std::string render_graph(const eposa::Graph& g, const std::string& format) {
    if (format == "graph6" || format == "g6") return eposa::encode_graph6(g) + "\n";
    if (format == "dot") return eposa::to_dot(g);
    throw eposa::Error("unknown format: " + format);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        eposa::write_file(out_path, text);
}

eposa::Graph load_graph_file(const std::string& path) {
    Json j = Json::parse(eposa::read_file(path));
    if (j.contains("graph")) return eposa::graph_from_json(j.at("graph"));
    return eposa::graph_from_json(j);
}

struct TerminalSpec {
    std::string raw;
    std::array<eposa::VertexId, 4> resolve(const eposa::Graph& g) const {
        if (raw.empty()) return eposa::detect_terminals(g);
        std::array<eposa::VertexId, 4> t{};
        std::istringstream in(raw);
        std::string tok;
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(in, tok, ',')) throw eposa::Error("--terminals needs a,b,c,d");
            t[static_cast<size_t>(i)] = std::stoi(tok);
        }
        return t;
    }
};

eposa::Edge parse_edge(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw eposa::Error("edge must be u,v");
    return eposa::Edge(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heinlein wall gadget toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    std::string report_path;
    std::uint64_t budget_nodes = eposa::default_node_budget();

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate gadgets");
    gen->require_subcommand(1);

    int heinlein_r = 0;
    auto* gen_heinlein = gen->add_subcommand("heinlein", "Heinlein wall of size r");
    gen_heinlein->add_option("--size", heinlein_r, "wall size r")->required();

    int rows = 0, cols = 0;
    bool prime = false;
    auto* gen_grid = gen->add_subcommand("grid", "elementary grid");
    gen_grid->add_option("--rows", rows)->required();
    gen_grid->add_option("--cols", cols)->required();
    auto* gen_wall = gen->add_subcommand("wall", "elementary wall / wall'");
    gen_wall->add_option("--rows", rows)->required();
    gen_wall->add_option("--cols", cols)->required();
    gen_wall->add_flag("--prime", prime, "contract degree-2 vertices");

    std::string pattern_path, e1_str, e2_str;
    int z_r = 1, min_apart = 70;
    auto* gen_z = gen->add_subcommand("z", "counterexample graph Z");
    gen_z->add_option("--pattern", pattern_path, "wall' json with geometry")->required();
    gen_z->add_option("--e1", e1_str, "u,v")->required();
    gen_z->add_option("--e2", e2_str, "u,v")->required();
    gen_z->add_option("-r,--budget", z_r, "hitting-set budget r")->required();
    gen_z->add_option("--min-apart", min_apart, "required apartness of e1,e2 endpoints");

    for (auto* sc : {gen_heinlein, gen_grid, gen_wall, gen_z}) {
        sc->add_option("--format", format, "graph6|dot|json");
        sc->add_option("--out", out_path, "output path (default stdout)");
    }

    // ---- check ----
    auto* check = app.add_subcommand("check", "verify properties");
    check->require_subcommand(1);

    std::string input_path, subdiv_pattern_path;
    TerminalSpec terminals;
    int edge_budget = 0, assert_max = -1, apart_u = -1, apart_v = -1, apart_min = -1, samples = 100;
    std::string mode_str = "exhaustive";
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sc, bool with_input = true) {
        if (with_input) sc->add_option("input", input_path, "instance json")->required();
        sc->add_option("--json", report_path, "write the report here");
        sc->add_option("--budget-nodes", budget_nodes, "search node budget");
        return sc;
    };

    auto* chk_linkage = add_common(check->add_subcommand("linkage", "an (a*-b*, c*-d*) linkage exists"));
    chk_linkage->add_option("--terminals", terminals.raw, "a,b,c,d override");
    auto* chk_two = add_common(check->add_subcommand("two-linkages", "no two edge-disjoint linkages"));
    auto* chk_rob = add_common(check->add_subcommand("robustness", "linkage survives every deletion set"));
    chk_rob->add_option("--budget", edge_budget, "max deleted edges")->required();
    auto* chk_nhs = add_common(check->add_subcommand("no-hitting-set", "Z - U keeps an H-subdivision"));
    chk_nhs->add_option("--budget", edge_budget, "max deleted edges")->required();
    chk_nhs->add_option("--mode", mode_str, "exhaustive|structural|sampled");
    chk_nhs->add_option("--seed", seed, "sampled mode seed");
    chk_nhs->add_option("--samples", samples, "sampled mode draws");
    auto* chk_pw = add_common(check->add_subcommand("pathwidth", "exact pathwidth"));
    chk_pw->add_option("--assert-max", assert_max, "fail when width exceeds this");
    auto* chk_tw = add_common(check->add_subcommand("treewidth", "exact treewidth"));
    chk_tw->add_option("--assert-max", assert_max, "fail when width exceeds this");
    auto* chk_apart = add_common(check->add_subcommand("apart", "apartness of two wall vertices"));
    chk_apart->add_option("--u", apart_u)->required();
    chk_apart->add_option("--v", apart_v)->required();
    chk_apart->add_option("--min", apart_min, "fail when apartness is below this");
    auto* chk_sub = add_common(check->add_subcommand("subdivision", "pattern embeds as a subdivision"));
    chk_sub->add_option("--pattern", subdiv_pattern_path, "pattern graph json")->required();
    auto* chk_survey = add_common(check->add_subcommand("lemma5-survey", "linkage containment over all embeddings"));
    auto* chk_planar = add_common(check->add_subcommand("planar", "planarity"));

    int source_v = -1, center_v = -1, sep_bound = -1, brick1 = -1, brick2 = -1, brick_d = 0, far_d = 0;
    std::string targets_str, branch_str, path_str;
    auto* chk_sep = add_common(check->add_subcommand("separator", "smallest source-targets separator"));
    chk_sep->add_option("--source", source_v)->required();
    chk_sep->add_option("--targets", targets_str, "comma-separated vertex ids")->required();
    chk_sep->add_option("--max", sep_bound, "fail when the separator exceeds this size");
    auto* chk_fan = add_common(check->add_subcommand("three-fan", "a 3-fan from a vertex into a set"));
    chk_fan->add_option("--center", center_v)->required();
    chk_fan->add_option("--targets", targets_str, "comma-separated vertex ids")->required();
    auto* chk_bm = add_common(check->add_subcommand("b-m", "vertices sending a 3-fan to the branch set"));
    chk_bm->add_option("--branch", branch_str, "comma-separated vertex ids (default: all)");
    auto* chk_bricks = add_common(check->add_subcommand("bricks-apart", "brick pair apartness"));
    chk_bricks->add_option("--b1", brick1)->required();
    chk_bricks->add_option("--b2", brick2)->required();
    chk_bricks->add_option("--d", brick_d)->required();
    auto* chk_far = add_common(check->add_subcommand("far-pair", "lexicographically first d-apart edge pair"));
    chk_far->add_option("--d", far_d)->required();
    auto* chk_profile = add_common(check->add_subcommand("path-profile", "rows and columns met by a path"));
    chk_profile->add_option("--path", path_str, "comma-separated vertex sequence")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        // ---- generators ----
        if (gen_heinlein->parsed() || gen_grid->parsed() || gen_wall->parsed() || gen_z->parsed()) {
            if (gen_heinlein->parsed()) {
                eposa::HeinleinWall w = eposa::heinlein_wall(heinlein_r);
                emit(format == "json" ? eposa::heinlein_to_json(w).dump(2) + "\n" : render_graph(w.graph, format),
                     out_path);
            } else if (gen_grid->parsed()) {
                eposa::Graph g = eposa::elementary_grid(rows, cols);
                emit(format == "json" ? eposa::graph_to_json(g).dump(2) + "\n" : render_graph(g, format), out_path);
            } else if (gen_wall->parsed()) {
                eposa::Wall w = prime ? eposa::wall_prime(rows, cols) : eposa::elementary_wall(rows, cols);
                emit(format == "json" ? eposa::wall_to_json(w).dump(2) + "\n" : render_graph(w.graph, format),
                     out_path);
            } else {
                Json pj = Json::parse(eposa::read_file(pattern_path));
                eposa::WallDesignation designation;
                designation.wall = eposa::wall_from_json(pj);
                for (eposa::VertexId v = 0; v < designation.wall.graph.vertex_count(); ++v)
                    designation.to_host.push_back(v);  // the pattern is the wall itself
                eposa::CounterexampleInstance inst = eposa::build_z(designation.wall.graph, designation,
                                                                    parse_edge(e1_str), parse_edge(e2_str), z_r,
                                                                    min_apart);
                Json ij = eposa::instance_to_json(inst);
                if (format == "json") {
                    emit(ij.dump(2) + "\n", out_path);
                } else {
                    emit(render_graph(inst.z, format), out_path);
                    std::string sidecar = out_path.empty() ? "" : out_path + ".instance.json";
                    if (!sidecar.empty())
                        eposa::write_file(sidecar, ij.dump(2) + "\n");
                    else
                        std::cout << ij.dump(2) << "\n";
                }
            }
            return 0;
        }

        // ---- checks ----
        eposa::Budget budget(budget_nodes);
        auto finish = [&](ReportSink& sink, bool holds, std::uint64_t nodes) {
            sink.out_path = report_path;
            sink.finish(holds ? "pass" : "fail", nodes);
            return holds ? 0 : 1;
        };

        const std::string input_text = input_path.empty() ? "" : eposa::read_file(input_path);

        if (chk_linkage->parsed()) {
            ReportSink sink(argc, argv, "linkage-exists");
            sink.set_instance_file(input_path, input_text);
            eposa::Graph g = load_graph_file(input_path);
            auto [a, b, c, d] = terminals.resolve(g);
            auto l = eposa::find_linkage(g, a, b, c, d, {}, &budget);
            if (l) sink.report["witness"] = linkage_json(*l);
            return finish(sink, l.has_value(), budget.used);
        }
        if (chk_two->parsed()) {
            ReportSink sink(argc, argv, "no-two-edge-disjoint-linkages");
            sink.set_instance_file(input_path, input_text);
            eposa::HeinleinWall w = eposa::heinlein_from_json(Json::parse(input_text));
            try {
                auto res = eposa::exists_two_edge_disjoint_linkages(w, &budget);
                if (res.exists && res.witness) {
                    Json pair;
                    pair["first"] = linkage_json(res.witness->first);
                    pair["second"] = linkage_json(res.witness->second);
                    sink.report["witness"] = pair;
                }
                return finish(sink, !res.exists, budget.used);
            } catch (const eposa::ResourceLimitError&) {
                sink.out_path = report_path;
                sink.finish("resource_limit", budget.used);
                return 3;
            }
        }
        if (chk_rob->parsed()) {
            ReportSink sink(argc, argv, "hitting-set-robustness");
            sink.set_instance_file(input_path, input_text);
            sink.report["parameters"] = Json{{"budget", edge_budget}};
            eposa::HeinleinWall w = eposa::heinlein_from_json(Json::parse(input_text));
            try {
                auto res = eposa::hitting_robustness(w, edge_budget, &budget);
                sink.report["cases"] = res.cases;
                if (res.witness_u) sink.report["witness"] = edges_json(*res.witness_u);
                return finish(sink, res.robust, budget.used);
            } catch (const eposa::ResourceLimitError&) {
                sink.out_path = report_path;
                sink.finish("resource_limit", budget.used);
                return 3;
            }
        }
        if (chk_nhs->parsed()) {
            ReportSink sink(argc, argv, "no-small-hitting-set");
            sink.set_instance_file(input_path, input_text);
            eposa::CheckMode m;
            if (mode_str == "structural") m = eposa::CheckMode::Structural;
            else if (mode_str == "sampled") m = eposa::CheckMode::Sampled;
            else if (mode_str == "exhaustive") m = eposa::CheckMode::Exhaustive;
            else throw eposa::Error("bad --mode: " + mode_str);
            sink.report["mode"] = mode_str;
            sink.report["parameters"] = Json{{"budget", edge_budget}, {"seed", seed}, {"samples", samples}};
            eposa::CounterexampleInstance inst = eposa::instance_from_json(Json::parse(input_text));
            eposa::validate_instance(inst);
            try {
                auto rep = eposa::check_no_hitting_set(inst, edge_budget, m, seed, samples, &budget);
                sink.report["cases"] = rep.cases;
                if (!rep.detail.empty()) sink.report["detail"] = rep.detail;
                if (rep.failing_u) sink.report["witness"] = edges_json(*rep.failing_u);
                return finish(sink, rep.pass, budget.used);
            } catch (const eposa::ResourceLimitError&) {
                sink.out_path = report_path;
                sink.finish("resource_limit", budget.used);
                return 3;
            }
        }
        if (chk_pw->parsed() || chk_tw->parsed()) {
            const bool path = chk_pw->parsed();
            ReportSink sink(argc, argv, path ? "pathwidth" : "treewidth");
            sink.set_instance_file(input_path, input_text);
            eposa::Graph g = load_graph_file(input_path);
            int width;
            Json cert;
            if (path) {
                auto pd = eposa::pathwidth_exact(g);
                width = pd.width;
                cert["order"] = path_json(pd.order);
            } else {
                auto td = eposa::treewidth_exact(g);
                width = td.width;
                cert["elimination_order"] = path_json(td.elimination_order);
            }
            cert["width"] = width;
            sink.report["witness"] = cert;
            bool holds = assert_max < 0 || width <= assert_max;
            if (assert_max >= 0) sink.report["parameters"] = Json{{"assert_max", assert_max}};
            return finish(sink, holds, budget.used);
        }
        if (chk_apart->parsed()) {
            ReportSink sink(argc, argv, "apartness");
            sink.set_instance_file(input_path, input_text);
            eposa::Wall w = eposa::wall_from_json(Json::parse(input_text));
            auto res = eposa::apartness(w, apart_u, apart_v);
            Json wj;
            wj["u"] = apart_u;
            wj["v"] = apart_v;
            wj["apartness"] = res.value;
            wj["witness_path"] = path_json(res.witness_path);
            sink.report["witness"] = wj;
            bool holds = apart_min < 0 || res.value >= apart_min;
            if (apart_min >= 0) sink.report["parameters"] = Json{{"min", apart_min}};
            return finish(sink, holds, budget.used);
        }
        if (chk_sub->parsed()) {
            ReportSink sink(argc, argv, "subdivision-embeds");
            sink.set_instance_file(input_path, input_text);
            eposa::Graph host = load_graph_file(input_path);
            eposa::Graph pat = load_graph_file(subdiv_pattern_path);
            try {
                auto emb = eposa::find_subdivision(pat, host, &budget);
                if (emb) {
                    Json ej;
                    ej["branch"] = path_json(emb->branch);
                    sink.report["witness"] = ej;
                }
                return finish(sink, emb.has_value(), budget.used);
            } catch (const eposa::ResourceLimitError&) {
                sink.out_path = report_path;
                sink.finish("resource_limit", budget.used);
                return 3;
            }
        }
        if (chk_survey->parsed()) {
            ReportSink sink(argc, argv, "every-subdivision-contains-linkage");
            sink.set_instance_file(input_path, input_text);
            eposa::CounterexampleInstance inst = eposa::instance_from_json(Json::parse(input_text));
            eposa::validate_instance(inst);
            try {
                auto survey = eposa::all_subdivisions_contain_linkage(inst, &budget);
                Json sj;
                sj["embeddings"] = survey.embeddings;
                sj["expanded"] = survey.expanded;
                sj["conforming"] = survey.conforming;
                sj["violating"] = survey.violating;
                sink.report["witness"] = sj;
                return finish(sink, true, budget.used);  // instrument: always pass, data in report
            } catch (const eposa::ResourceLimitError&) {
                sink.out_path = report_path;
                sink.finish("resource_limit", budget.used);
                return 3;
            }
        }
        if (chk_planar->parsed()) {
            ReportSink sink(argc, argv, "planarity");
            sink.set_instance_file(input_path, input_text);
            eposa::Graph g = load_graph_file(input_path);
            return finish(sink, eposa::is_planar(g), budget.used);
        }
        return 2;
    } catch (const eposa::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const eposa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: bad input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
