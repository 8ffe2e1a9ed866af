#ifndef EPOSA_PLANARITY_HPP
#define EPOSA_PLANARITY_HPP

#include "eposa/graph.hpp"

namespace eposa {

// Exact planarity test.
bool is_planar(const Graph& g);

}  // namespace eposa

#endif
