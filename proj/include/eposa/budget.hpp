#ifndef EPOSA_BUDGET_HPP
#define EPOSA_BUDGET_HPP

#include <cstdint>

#include "eposa/errors.hpp"

namespace eposa {

// Node counter for exhaustive searches. Exceeding the limit raises
// ResourceLimitError, which callers must report as its own outcome: an
// exclusion claim is only asserted on certified exhaustion.
struct Budget {
    explicit Budget(std::uint64_t limit_) : limit(limit_) {}
    std::uint64_t limit;
    std::uint64_t used = 0;

    void tick() {
        if (++used > limit) throw ResourceLimitError(used);
    }
};

// EPOSA_NODE_BUDGET from the environment, else a large default.
std::uint64_t default_node_budget();

}  // namespace eposa

#endif
