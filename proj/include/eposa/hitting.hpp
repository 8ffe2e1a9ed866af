#ifndef EPOSA_HITTING_HPP
#define EPOSA_HITTING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eposa/budget.hpp"
#include "eposa/gadgets.hpp"
#include "eposa/subdivision.hpp"

namespace eposa {

enum class CheckMode { Exhaustive, Structural, Sampled };

struct HittingReport {
    CheckMode mode = CheckMode::Exhaustive;
    bool pass = false;
    std::uint64_t cases = 0;                      // deletion sets examined
    std::optional<std::vector<Edge>> failing_u;   // witness if the claim fails
    std::string detail;
};

// Checks that Z - U contains a subdivision of H for every edge set U with
// |U| <= budget_edges (<= r). Exhaustive iterates all U; Structural verifies
// the two proof obligations instead (every multiplied family outlives the
// budget, and the wall linkage survives every wall deletion set); Sampled
// draws `samples` random sets from the given seed.
HittingReport check_no_hitting_set(const CounterexampleInstance& inst, int budget_edges, CheckMode mode,
                                   std::uint64_t seed = 0, int samples = 0, Budget* budget = nullptr);

struct LinkageSurvey {
    std::uint64_t embeddings = 0;  // canonical embeddings enumerated
    double expanded = 0;           // raw embeddings these represent
    std::uint64_t conforming = 0;  // embeddings containing a linkage inside W
    std::uint64_t violating = 0;
    std::optional<Embedding> violating_example;
};

// Enumerates every subdivision of the pattern in the host and reports how
// many contain an (a*-b*, c*-d*) linkage within the designated wall edges.
// An instrument: violations are data, not errors.
LinkageSurvey linkage_survey(const Graph& host, const Graph& pattern, const std::vector<Edge>& wall_edges,
                             const std::array<VertexId, 4>& terminals, Budget* budget = nullptr);

LinkageSurvey all_subdivisions_contain_linkage(const CounterexampleInstance& inst, Budget* budget = nullptr);

}  // namespace eposa

#endif
