#ifndef EPOSA_ERRORS_HPP
#define EPOSA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eposa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopEdgeError : Error {
    using Error::Error;
};
struct UnknownEdgeError : Error {
    using Error::Error;
};
struct DegenerateContractionError : Error {
    using Error::Error;
};
struct MalformedGraph6Error : Error {
    using Error::Error;
};
struct MalformedInputError : Error {
    using Error::Error;
};
struct InvalidSizeError : Error {
    using Error::Error;
};
struct DegenerateWallError : Error {
    using Error::Error;
};
struct NotSubcubicError : Error {
    using Error::Error;
};
struct EdgesNotFarApartError : Error {
    using Error::Error;
};
struct BadIncidenceError : Error {
    using Error::Error;
};
struct NoSuchPairError : Error {
    using Error::Error;
};
struct SameBrickError : Error {
    using Error::Error;
};
struct NotAPathError : Error {
    using Error::Error;
};

// Search-budget exhaustion. Exclusion claims must never be reported as
// "false" once this fires; callers surface it as a distinct outcome.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(std::uint64_t nodes)
        : Error("node budget exhausted after " + std::to_string(nodes) + " nodes"),
          nodes_used(nodes) {}
    std::uint64_t nodes_used;
};

}  // namespace eposa

#endif
