#include "eposa/hitting.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "eposa/linkage.hpp"

namespace eposa {

namespace {

bool subdivision_survives(const CounterexampleInstance& inst, const std::vector<Edge>& u, Budget& bd) {
    Graph z_minus_u = delete_edges(inst.z, u);
    return find_subdivision(inst.pattern, z_minus_u, &bd).has_value();
}

}  // namespace

HittingReport check_no_hitting_set(const CounterexampleInstance& inst, int budget_edges, CheckMode mode,
                                   std::uint64_t seed, int samples, Budget* budget) {
    if (budget_edges < 0 || budget_edges > inst.r)
        throw InvalidSizeError("deletion budget must lie in [0, r]");
    Budget local(default_node_budget());
    Budget& bd = budget ? *budget : local;

    HittingReport rep;
    rep.mode = mode;

    switch (mode) {
        case CheckMode::Exhaustive: {
            const auto& edges = inst.z.edges();
            std::vector<Edge> u;
            auto rec = [&](auto&& self, int start) -> bool {
                ++rep.cases;
                if (!subdivision_survives(inst, u, bd)) {
                    rep.failing_u = u;
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
            rep.pass = rec(rec, 0);
            break;
        }
        case CheckMode::Structural: {
            // Two obligations: every multiplied edge keeps an intact path
            // (each deleted edge kills at most one of the 2r copies), and
            // the wall linkage survives every deletion set within budget.
            std::ostringstream detail;
            bool families_ok = budget_edges < 2 * inst.r;
            detail << "family slack: 2r = " << 2 * inst.r << " > budget = " << budget_edges
                   << (families_ok ? " (ok)" : " (violated)");
            HeinleinWall wall = heinlein_wall(2 * inst.r);  // standalone copy of the glued wall
            RobustnessResult rob = hitting_robustness(wall, budget_edges, &bd);
            rep.cases = rob.cases;
            detail << "; wall robustness cases = " << rob.cases << (rob.robust ? " (ok)" : " (violated)");
            rep.pass = families_ok && rob.robust;
            if (!rob.robust && rob.witness_u) rep.failing_u = rob.witness_u;
            rep.detail = detail.str();
            break;
        }
        case CheckMode::Sampled: {
            std::mt19937_64 rng(seed);
            const auto& edges = inst.z.edges();
            for (int k = 0; k < samples; ++k) {
                // uniform subset of size budget_edges
                std::set<int> pick;
                while (static_cast<int>(pick.size()) < budget_edges)
                    pick.insert(static_cast<int>(rng() % edges.size()));
                std::vector<Edge> u;
                for (int i : pick) u.push_back(edges[static_cast<size_t>(i)]);
                ++rep.cases;
                if (!subdivision_survives(inst, u, bd)) {
                    rep.failing_u = u;
                    rep.pass = false;
                    return rep;
                }
            }
            rep.pass = true;
            break;
        }
    }
    return rep;
}

LinkageSurvey linkage_survey(const Graph& host, const Graph& pattern, const std::vector<Edge>& wall_edges,
                             const std::array<VertexId, 4>& terminals, Budget* budget) {
    Budget local(default_node_budget());
    Budget& bd = budget ? *budget : local;

    std::set<Edge> wall_set(wall_edges.begin(), wall_edges.end());
    const auto [a, b, c, d] = terminals;

    LinkageSurvey survey;
    enumerate_subdivisions(
        pattern, host,
        [&](const Embedding& emb) {
            ++survey.embeddings;
            survey.expanded += midpoint_expansion_factor(host, emb);
            // Edges of Phi(H) that lie inside the wall.
            GraphBuilder sub;
            sub.ensure_vertex(host.vertex_count() - 1);
            for (const auto& p : emb.edge_paths)
                for (size_t i = 0; i + 1 < p.size(); ++i)
                    if (wall_set.count(Edge(p[i], p[i + 1]))) sub.add_edge(p[i], p[i + 1]);
            Graph phi_in_wall = sub.build();
            if (find_linkage(phi_in_wall, a, b, c, d, {}, &bd)) {
                ++survey.conforming;
            } else {
                ++survey.violating;
                if (!survey.violating_example) survey.violating_example = emb;
            }
            return false;
        },
        &bd);
    return survey;
}

LinkageSurvey all_subdivisions_contain_linkage(const CounterexampleInstance& inst, Budget* budget) {
    return linkage_survey(inst.z, inst.pattern, inst.wall_edges,
                          {inst.wall.a, inst.wall.b, inst.wall.c(), inst.wall.d()}, budget);
}

}  // namespace eposa
