#include "eposa/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace eposa {

bool is_planar(const Graph& g) {
    // Quick Euler-bound rejection; the main test follows.
    const int n = g.vertex_count();
    if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
    if (n <= 4) return true;

    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<size_t>(n));
    for (const Edge& e : g.edges()) boost::add_edge(static_cast<size_t>(e.u), static_cast<size_t>(e.v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace eposa
